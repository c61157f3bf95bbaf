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
 * Monte Carlo play of the ways/phases game.
 *
 * Trial t draws from CounterRng(seed, t) in this order: the House coin
 * (uniform < coin_bias selects ways), then for ways Alice's path and Bob's
 * outcome, for phases the label r and Alice's guess. Measurements are
 * solved once per configuration and reduced to conditional tables.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "duality/discrimination.hpp"
#include "duality/interferometer.hpp"
#include "duality/rng.hpp"

namespace duality {

struct GameConfig {
    DensityMatrix rho;
    DetectorGram s;
    PhaseSet phases;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    double coin_bias = 0.5; // probability of the ways game
    unsigned threads = 1;
    StrategyOptions solver{};

    [[nodiscard]] std::size_t n() const noexcept { return rho.dim(); }
    void validate() const;
};

/// The optimal symmetric configuration: maximally coherent input, constant overlap
/// 1/2 + 1/(2 + 2 sqrt n), canonical phases.
GameConfig theorem1_config(std::size_t n, std::uint64_t trials,
                           std::uint64_t seed);

struct GameStats {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t wins_ways = 0;
    std::uint64_t plays_ways = 0;
    std::uint64_t wins_phases = 0;
    std::uint64_t plays_phases = 0;
    double empirical_pwin = 0.0;
    double analytic_pwin = 0.0;
    double std_error = 0.0; // sqrt(p (1 - p) / trials), p empirical
    double p_ways = 0.0;    // solver values behind analytic_pwin
    double p_phases = 0.0;

    /// |empirical - analytic| <= 4 sqrt(max(p(1-p), q(1-q)) / trials) with
    /// p empirical and q analytic. The analytic variance keeps the band
    /// meaningful when p(1-p) happens to be 0 in a short run.
    [[nodiscard]] bool consistent() const;

    bool operator==(const GameStats &) const = default;
};

/// Measurement tables for one configuration.
struct GamePlan {
    std::size_t n = 0;
    std::vector<double> path_probs; // rho_jj
    Strategy ways;
    Strategy phases;
};

GamePlan make_plan(const GameConfig &cfg);

/// One ways round: Alice's path j ~ rho_jj, Bob's outcome ~ P(b | eta_j).
bool play_ways(const GamePlan &plan, CounterRng &rng);

/// One phases round: r uniform, Alice's guess ~ tr(Pi_g rho_r).
bool play_phases(const GamePlan &plan, CounterRng &rng);

GameStats run_combined(const GameConfig &cfg);

/// Bob with access to the particle: he identifies the phase label, then
/// prepares path state |r>. Only the maximally coherent input is supported
/// (UnsupportedInput otherwise).
GameStats cheat_unrestricted(const GameConfig &cfg);

} // namespace duality
