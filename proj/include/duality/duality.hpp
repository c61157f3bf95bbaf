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
 * Wave-particle duality bounds for n-path interferometers.
 *
 * Coordinates: x measures phase information, y path information, both
 * rescaled so random guessing maps to 0 and certainty to 1. The physical
 * region is the union of the triangle x + y <= 1 and the ellipse
 *
 *   ((x + y - c) / a)^2 + ((x - y) / b)^2 <= 1,
 *   c = (n-2)/(n-1),  a = sqrt(n)/(n-1),  b = sqrt(n/(n-1)),
 *
 * which for n = 2 is the unit disc.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace duality {

enum class PointSource { Coherence, Operational, Boundary };

struct DualityPoint {
    double x = 0.0;
    double y = 0.0;
    std::size_t n = 2;
    PointSource source = PointSource::Coherence;
    bool outside_quadrant = false; // x or y below zero
};

/// Ellipse geometry for a given n.
struct RegionSpec {
    std::size_t n = 2;
    double center = 0.0;     // the center is (center, center)
    double semi_minor = 0.0; // along (1, 1) / sqrt 2
    double semi_major = 0.0; // along (1, -1) / sqrt 2
    double c = 0.0;
    double a = 0.0;
    double b = 0.0;
};

RegionSpec region_spec(std::size_t n);

/// X - (n-2)/n (1 - P_d) - (2/n) sqrt((n-1) P_d (1 - P_d)).
double lemma1_lhs(double x_coh, double pd, std::size_t n);

/// 1/2 + 1/(2 sqrt n).
double theorem1_bound(std::size_t n);

/// 1/2 + 1/(2 + 2 sqrt n).
double optimal_overlap(std::size_t n);

/// x = X / (1 - 1/n), y = (P_d - 1/n) / (1 - 1/n).
DualityPoint to_xy(double x_coh, double pd, std::size_t n);

/// x = (P_ph - 1/n) / (1 - 1/n), y = (P_way - 1/n) / (1 - 1/n).
DualityPoint to_xy_operational(double pph, double pway, std::size_t n);

/// x^2 + y^2 - 1.
double circle_relation(const DualityPoint &p);

/// Left-hand side of the ellipse inequality (1 on the boundary).
double ellipse_form(double x, double y, std::size_t n);

struct Membership {
    bool member = false;
    double ellipse_excess = 0.0; // ellipse_form - 1
};

/// Member iff x, y > -tol and (x + y - 1 <= tol or ellipse_form <= 1 + tol).
Membership region_membership(const DualityPoint &p, double tol = 1e-9);

/// Signed distance-like violation of the union: positive only outside it.
double region_excess(const DualityPoint &p);

/// Parametric boundary: x = (c + a cos t + b sin t) / 2,
/// y = (c + a cos t - b sin t) / 2. Requires n >= 3.
DualityPoint ellipse_boundary(std::size_t n, double t);

/// (cos t, sin t): the n = 2 boundary.
DualityPoint circle_boundary(double t);

/// Maximally coherent input with constant detector overlap s:
/// x = s and y from the closed-form discrimination value.
DualityPoint symmetric_family_point(std::size_t n, double s);

/// Monte Carlo estimate of the region's area inside the unit square.
double region_area(std::size_t n, std::size_t samples, std::uint64_t seed);

/// One line of a region export. s_or_t is empty for sampled points.
struct RegionRow {
    std::size_t n = 2;
    std::optional<double> s_or_t;
    double x = 0.0;
    double y = 0.0;
    double ellipse_form = 0.0;
    double lemma1_lhs = 0.0;

    bool operator==(const RegionRow &) const = default;
};

/// Boundary rows: the quarter circle (129 points over [0, pi/2]) for n = 2,
/// otherwise the ellipse (256 values of t over [0, 2 pi), quadrant points
/// only), then the triangle hypotenuse (s, 1 - s) at 65 points.
std::vector<RegionRow> boundary_rows(std::size_t n);

/// Row for a boundary point; lemma1_lhs is evaluated at the X and P_d the
/// point corresponds to.
RegionRow make_row(const DualityPoint &p, std::optional<double> s_or_t);

} // namespace duality
