// Copyright 2026 The Duality Games Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Text formats: region CSV, game records and JSON configuration files.
 *
 * Configuration files are JSON objects with "schema": 1. Recognized keys:
 *   n, trials, seed, coin_bias, threads,
 *   rho     "maximally_coherent" or a matrix,
 *   gram    a matrix (alternative to overlap),
 *   overlap constant detector overlap,
 *   phases  "canonical" or n*n radians, row-major (phases[r * n + j]).
 * A matrix is {"n": n, "re": [...], "im": [...]} with row-major entries;
 * "im" may be omitted for real matrices. Missing keys default to the
 * optimal symmetric configuration. Floats are written in shortest round-trip form.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "duality/duality.hpp"
#include "duality/game.hpp"
#include "duality/matrix.hpp"
#include "duality/sampler.hpp"

namespace duality {

/// Shortest representation that round-trips, never more than 17
/// significant digits, '.' decimal point, independent of locale.
std::string format_double(double v);

/// Strict parse of a whole token; throws Parse on anything else.
double parse_double(std::string_view text);

inline constexpr std::string_view kRegionHeader =
    "n,s_or_t,x,y,ellipse_form,lemma1_lhs";

void write_region_csv(std::ostream &out, const std::vector<RegionRow> &rows);
std::vector<RegionRow> read_region_csv(std::istream &in);

/// key=value lines, one per GameStats field, in a fixed order.
std::string format_game_stats(const GameStats &s);
std::string game_stats_json(const GameStats &s);

/// Throws Parse (malformed text, wrong schema, NaN or non-finite
/// numbers, wrong types) or the validation error of the built objects.
GameConfig parse_game_config(std::string_view text);
GameConfig load_game_config(const std::string &path);

/// Inverse of parse_game_config.
std::string game_config_json(const GameConfig &cfg);

/// JSON record of a physical configuration (keys schema, n, rho, gram,
/// phases), used to report violations.
std::string physical_config_json(const DensityMatrix &rho,
                                 const DetectorGram &s, const PhaseSet &p);
PhysicalConfig parse_physical_config(std::string_view text);

} // namespace duality
