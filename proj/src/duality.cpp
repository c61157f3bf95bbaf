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

#include "duality/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "duality/discrimination.hpp"
#include "duality/error.hpp"
#include "duality/rng.hpp"
#include "duality/tolerances.hpp"

namespace duality {

namespace {

void require_n(std::size_t n) {
    DUALITY_REQUIRE(n >= 2, ErrorCode::InvalidDim,
                    "need n >= 2, got " + std::to_string(n));
}

double nd(std::size_t n) { return static_cast<double>(n); }

void require_unit(double v, double lo, const char *what) {
    DUALITY_REQUIRE(std::isfinite(v) && v >= lo - kTol.coordinate &&
                        v <= 1.0 + kTol.coordinate,
                    ErrorCode::OutOfRange,
                    std::string(what) + " = " + std::to_string(v) +
                        " out of range");
}

} // namespace

RegionSpec region_spec(std::size_t n) {
    require_n(n);
    RegionSpec r;
    r.n = n;
    r.c = (nd(n) - 2.0) / (nd(n) - 1.0);
    r.a = std::sqrt(nd(n)) / (nd(n) - 1.0);
    r.b = std::sqrt(nd(n) / (nd(n) - 1.0));
    r.center = r.c / 2.0;
    r.semi_minor = r.a / std::numbers::sqrt2;
    r.semi_major = r.b / std::numbers::sqrt2;
    return r;
}

double lemma1_lhs(double x_coh, double pd, std::size_t n) {
    require_n(n);
    const double inv = 1.0 / nd(n);
    DUALITY_REQUIRE(std::isfinite(x_coh) && x_coh >= -kTol.coordinate &&
                        x_coh <= 1.0 - inv + kTol.coordinate,
                    ErrorCode::OutOfRange,
                    "X = " + std::to_string(x_coh) + " out of range");
    require_unit(pd, inv, "P_d");
    const double p = std::clamp(pd, 0.0, 1.0);
    return x_coh - (nd(n) - 2.0) * inv * (1.0 - p) -
           2.0 * inv * std::sqrt((nd(n) - 1.0) * p * (1.0 - p));
}

double theorem1_bound(std::size_t n) {
    require_n(n);
    return 0.5 + 0.5 / std::sqrt(nd(n));
}

double optimal_overlap(std::size_t n) {
    require_n(n);
    return 0.5 + 1.0 / (2.0 + 2.0 * std::sqrt(nd(n)));
}

DualityPoint to_xy(double x_coh, double pd, std::size_t n) {
    require_n(n);
    const double inv = 1.0 / nd(n);
    DUALITY_REQUIRE(std::isfinite(x_coh) && x_coh >= -kTol.coordinate &&
                        x_coh <= 1.0 - inv + kTol.coordinate,
                    ErrorCode::OutOfRange,
                    "X = " + std::to_string(x_coh) + " out of range");
    require_unit(pd, inv, "P_d");
    return {x_coh / (1.0 - inv), (pd - inv) / (1.0 - inv), n,
            PointSource::Coherence, false};
}

DualityPoint to_xy_operational(double pph, double pway, std::size_t n) {
    require_n(n);
    const double inv = 1.0 / nd(n);
    require_unit(pph, inv, "P_ph");
    require_unit(pway, inv, "P_way");
    return {(pph - inv) / (1.0 - inv), (pway - inv) / (1.0 - inv), n,
            PointSource::Operational, false};
}

double circle_relation(const DualityPoint &p) {
    return p.x * p.x + p.y * p.y - 1.0;
}

double ellipse_form(double x, double y, std::size_t n) {
    const RegionSpec r = region_spec(n);
    const double u = (x + y - r.c) / r.a;
    const double v = (x - y) / r.b;
    return u * u + v * v;
}

Membership region_membership(const DualityPoint &p, double tol) {
    const double excess = ellipse_form(p.x, p.y, p.n) - 1.0;
    const bool quadrant = p.x > -tol && p.y > -tol;
    const bool inside = p.x + p.y - 1.0 <= tol || excess <= tol;
    return {quadrant && inside, excess};
}

double region_excess(const DualityPoint &p) {
    const double union_excess =
        std::min(p.x + p.y - 1.0, ellipse_form(p.x, p.y, p.n) - 1.0);
    return std::max({union_excess, -p.x, -p.y});
}

DualityPoint ellipse_boundary(std::size_t n, double t) {
    require_n(n);
    DUALITY_REQUIRE(n >= 3, ErrorCode::InvalidDim,
                    "n = 2 boundary is the circle");
    const RegionSpec r = region_spec(n);
    const double along = r.a * std::cos(t);
    const double across = r.b * std::sin(t);
    DualityPoint p{(r.c + along + across) / 2.0, (r.c + along - across) / 2.0,
                   n, PointSource::Boundary, false};
    p.outside_quadrant = p.x < 0.0 || p.y < 0.0;
    return p;
}

DualityPoint circle_boundary(double t) {
    return {std::cos(t), std::sin(t), 2, PointSource::Boundary, false};
}

DualityPoint symmetric_family_point(std::size_t n, double s) {
    require_n(n);
    DUALITY_REQUIRE(s >= 0.0 && s <= 1.0, ErrorCode::OutOfRange,
                    "overlap " + std::to_string(s) + " outside [0, 1]");
    const double inv = 1.0 / nd(n);
    const double pd = symmetric_pd(n, s);
    return {s, std::max(0.0, (pd - inv) / (1.0 - inv)), n,
            PointSource::Coherence, false};
}

double region_area(std::size_t n, std::size_t samples, std::uint64_t seed) {
    require_n(n);
    DUALITY_REQUIRE(samples > 0, ErrorCode::OutOfRange, "need samples > 0");
    CounterRng rng(seed, n);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = rng.uniform();
        const double y = rng.uniform();
        if (region_membership({x, y, n, PointSource::Boundary, false}, 0.0)
                .member) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

RegionRow make_row(const DualityPoint &p, std::optional<double> s_or_t) {
    const double inv = 1.0 / nd(p.n);
    RegionRow row;
    row.n = p.n;
    row.s_or_t = s_or_t;
    row.x = p.x;
    row.y = p.y;
    row.ellipse_form = ellipse_form(p.x, p.y, p.n);
    const double x_coh = std::clamp(p.x, 0.0, 1.0) * (1.0 - inv);
    const double pd = std::clamp(p.y, 0.0, 1.0) * (1.0 - inv) + inv;
    row.lemma1_lhs = lemma1_lhs(x_coh, pd, p.n);
    return row;
}

std::vector<RegionRow> boundary_rows(std::size_t n) {
    require_n(n);
    std::vector<RegionRow> rows;
    if (n == 2) {
        constexpr int kArc = 128;
        for (int k = 0; k <= kArc; ++k) {
            const double t = std::numbers::pi / 2.0 * k / kArc;
            DualityPoint p = circle_boundary(t);
            // cos(pi/2) is 6e-17, not 0
            if (k == kArc) {
                p.x = 0.0;
            }
            rows.push_back(make_row(p, t));
        }
    } else {
        constexpr int kEllipse = 256;
        for (int k = 0; k < kEllipse; ++k) {
            const double t = 2.0 * std::numbers::pi * k / kEllipse;
            const DualityPoint p = ellipse_boundary(n, t);
            if (!p.outside_quadrant) {
                rows.push_back(make_row(p, t));
            }
        }
    }
    constexpr int kEdge = 64;
    for (int k = 0; k <= kEdge; ++k) {
        const double s = static_cast<double>(k) / kEdge;
        rows.push_back(make_row({s, 1.0 - s, n, PointSource::Boundary, false}, s));
    }
    return rows;
}

} // namespace duality
