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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "duality/discrimination.hpp"
#include "duality/duality.hpp"
#include "duality/game.hpp"
#include "duality/linalg.hpp"
#include "duality/rng.hpp"
#include "duality/sampler.hpp"
#include "duality/serialize.hpp"

using namespace duality;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double angle_sweep(double p0, double c) {
    constexpr int kPoints = 100000;
    const double sc = std::sqrt(1.0 - c * c);
    double best = 0.0;
    for (int k = 0; k < kPoints; ++k) {
        const double a = std::numbers::pi * k / kPoints;
        const double hit1 = -std::sin(a) * c + std::cos(a) * sc;
        best = std::max(best, p0 * std::cos(a) * std::cos(a) + (1 - p0) * hit1 * hit1);
    }
    return best;
}

Outcome ac1() {
    Outcome o;
    double worst_closed = 0.0;
    double worst_solver = 0.0;
    double worst_win = 0.0;
    for (std::size_t n : {2UL, 3UL, 4UL, 6UL, 8UL}) {
        const double target = 0.5 + 1.0 / (2.0 * std::sqrt(static_cast<double>(n)));
        const double s = optimal_overlap(n);
        const DensityMatrix rho = maximally_coherent(n);
        const DetectorGram g = DetectorGram::constant_overlap(n, s);
        const PhaseSet p = canonical_phases(n);

        worst_closed = std::max(worst_closed, std::abs(symmetric_pd(n, s) - target));
        worst_closed = std::max(worst_closed, std::abs(pph_upper(rho, g) - target));

        const GramFactor gf = maximize_gram_value(ways_gram(rho, g));
        const PovmSolution ways_fp = povm_fixed_point(ways_ensemble(rho, g));
        const PovmSolution ph_fp = povm_fixed_point(phases_ensemble(rho, g, p));
        for (double v : {gf.value, ways_fp.value, ph_fp.value}) {
            worst_solver = std::max(worst_solver, std::abs(v - target));
        }
        o.require(gf.certified, "Gram ascent uncertified at n=" + std::to_string(n));

        const GamePlan plan = make_plan(theorem1_config(n, 1, 0));
        const double pwin = 0.5 * (plan.ways.value + plan.phases.value);
        worst_win = std::max(worst_win, std::abs(pwin - theorem1_bound(n)));
    }
    o.require(worst_closed <= 1e-9, "closed form off by " + fmt(worst_closed));
    o.require(worst_solver <= 1e-6, "solvers off by " + fmt(worst_solver));
    o.require(worst_win <= 1e-6, "P_win off by " + fmt(worst_win));
    if (o.pass) {
        o.detail = "closed form " + fmt(worst_closed) + ", solvers " + fmt(worst_solver) +
                   ", P_win " + fmt(worst_win);
    }
    return o;
}

// Sweeps are shared by the soundness and region criteria.
std::vector<SweepResult> &sweeps() {
    static std::vector<SweepResult> results = [] {
        std::vector<SweepResult> r;
        for (std::size_t n = 2; n <= 6; ++n) {
            SweepOptions opts;
            opts.n = n;
            opts.count = 10000;
            opts.seed = 2024;
            r.push_back(soundness_sweep(opts));
        }
        return r;
    }();
    return results;
}

Outcome ac2() {
    Outcome o;
    double max_lhs = -1.0;
    double max_upper = -1.0;
    for (std::size_t i = 0; i < sweeps().size(); ++i) {
        const SweepResult &r = sweeps()[i];
        o.require(r.count == 10000, "short sweep");
        o.require(r.max_lhs <= 1e-8, "LHS " + fmt(r.max_lhs) + " at n=" +
                                         std::to_string(i + 2) + " index " +
                                         std::to_string(r.worst_lhs_index));
        o.require(r.max_lhs_upper <= 1e-8,
                  "dual-bound LHS " + fmt(r.max_lhs_upper) + " at n=" + std::to_string(i + 2));
        max_lhs = std::max(max_lhs, r.max_lhs);
        max_upper = std::max(max_upper, r.max_lhs_upper);
    }
    double worst_family = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const double nd = static_cast<double>(n);
        for (int k = 0; k < 100; ++k) {
            const double s = k / 99.0;
            worst_family = std::max(
                worst_family, std::abs(lemma1_lhs((nd - 1) * s / nd, symmetric_pd(n, s), n)));
        }
    }
    o.require(worst_family <= 1e-8, "attainment residual " + fmt(worst_family));
    if (o.pass) {
        o.detail = "5x10^4 configs, max LHS " + fmt(max_lhs) + " (dual bound " +
                   fmt(max_upper) + "), family " + fmt(worst_family);
    }
    return o;
}

Outcome ac3() {
    Outcome o;
    double excess = -1.0;
    double gap = -1.0;
    for (std::size_t i = 0; i < sweeps().size(); ++i) {
        excess = std::max(excess, sweeps()[i].max_region_excess);
        gap = std::max(gap, sweeps()[i].max_x_gap);
    }
    o.require(excess <= 1e-8, "operational point outside region by " + fmt(excess));
    o.require(gap <= 1e-12, "operational x above coherence x by " + fmt(gap));

    double family = 0.0;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int k = 0; k < 100; ++k) {
            const DualityPoint p = symmetric_family_point(n, k / 99.0);
            family = std::max(family, std::abs(ellipse_form(p.x, p.y, n) - 1.0));
        }
    }
    o.require(family <= 1e-8, "family off ellipse by " + fmt(family));

    CounterRng rng(7);
    double circle = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform();
        const double y = rng.uniform();
        circle = std::max(circle, std::abs(ellipse_form(x, y, 2) - (x * x + y * y)));
    }
    o.require(circle <= 1e-12, "n=2 form differs from circle by " + fmt(circle));

    for (std::size_t n : {2UL, 9UL}) {
        const std::string path =
            std::string(DUALITY_GOLDEN_DIR) + "/region_n" + std::to_string(n) + ".csv";
        std::ifstream in(path, std::ios::binary);
        std::stringstream want;
        want << in.rdbuf();
        std::stringstream got;
        write_region_csv(got, boundary_rows(n));
        o.require(in.good() || !want.str().empty(), "cannot read " + path);
        o.require(got.str() == want.str(), "golden mismatch for n=" + std::to_string(n));
    }
    if (o.pass) {
        o.detail = "max excess " + fmt(excess) + ", family " + fmt(family) + ", circle " +
                   fmt(circle) + ", goldens identical";
    }
    return o;
}

Outcome ac4() {
    Outcome o;
    double worst = 0.0;
    double worst_cert = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const DensityMatrix rho = maximally_coherent(n);
        for (int k = 1; k <= 9; ++k) {
            const double s = k / 10.0;
            const DetectorGram g = DetectorGram::constant_overlap(n, s);
            const double want = symmetric_pd(n, s);
            const Ensemble e = ways_ensemble(rho, g);
            const ComplexMatrix w = ways_gram(rho, g);

            const PovmSolution pg = pgm(e);
            const GramFactor gf = maximize_gram_value(w);
            const PovmSolution fp = povm_fixed_point(e);
            for (double v : {pg.value, gf.value, fp.value}) {
                worst = std::max(worst, std::abs(v - want));
            }
            for (double c : {certificate_residual(e, pg.povm),
                             certificate_residual(gram_ensemble(w), gram_povm(gf)),
                             certificate_residual(e, fp.povm)}) {
                worst_cert = std::max(worst_cert, c);
            }
        }
    }
    o.require(worst <= 1e-6, "solver vs closed form " + fmt(worst));
    o.require(worst_cert <= 1e-8, "certificate residual " + fmt(worst_cert));

    // n = 2 against the brute-force angle sweep, symmetric and random.
    double oracle_gap = 0.0;
    CounterRng rng(11);
    for (int t = 0; t < 30; ++t) {
        const double p0 = t < 9 ? 0.5 : 0.05 + 0.9 * rng.uniform();
        const double c = t < 9 ? (t + 1) / 10.0 : rng.uniform();
        ComplexMatrix v(2);
        const double phase = 2 * std::numbers::pi * rng.uniform();
        v(0, 0) = 1.0;
        v(0, 1) = std::polar(c, phase);
        v(1, 1) = std::sqrt(1.0 - c * c);
        const std::vector<double> p{p0, 1.0 - p0};
        const Ensemble e = pure_ensemble(p, v);
        ComplexMatrix w = adjoint_times(v, v);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                w(i, j) *= std::sqrt(p[i] * p[j]);
            }
        }
        const double oracle = angle_sweep(p0, c);
        std::vector<double> values{povm_fixed_point(e).value, maximize_gram_value(w).value};
        if (t < 9) {
            values.push_back(pgm(e).value);
        }
        for (double val : values) {
            oracle_gap = std::max(oracle_gap, std::abs(val - oracle));
        }
    }
    o.require(oracle_gap <= 1e-8, "n=2 oracle gap " + fmt(oracle_gap));
    if (o.pass) {
        o.detail = "max error " + fmt(worst) + ", certificate " + fmt(worst_cert) +
                   ", oracle gap " + fmt(oracle_gap);
    }
    return o;
}

Outcome ac5() {
    Outcome o;
    std::string summary;
    for (std::size_t n : {2UL, 4UL}) {
        GameConfig cfg = theorem1_config(n, 1000000, 42);
        const GameStats one = run_combined(cfg);
        cfg.threads = 8;
        const GameStats eight = run_combined(cfg);
        o.require(one == eight, "thread count changed counters at n=" + std::to_string(n));
        o.require(one.consistent(), "n=" + std::to_string(n) + " empirical " +
                                        fmt(one.empirical_pwin) + " outside band");
        o.require(std::abs(one.analytic_pwin - theorem1_bound(n)) <= 1e-6,
                  "analytic value off at n=" + std::to_string(n));
        summary += (summary.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) +
                   " deviation " + fmt(one.empirical_pwin - one.analytic_pwin) + " (4 se " +
                   fmt(4 * one.std_error) + ")";
    }
    if (o.pass) {
        o.detail = summary;
    }
    return o;
}

Outcome ac6() {
    Outcome o;
    for (std::size_t n = 2; n <= 8; ++n) {
        const GameStats s = cheat_unrestricted(theorem1_config(n, 100000, 5));
        o.require(s.empirical_pwin == 1.0 && s.analytic_pwin == 1.0,
                  "cheat below 1 at n=" + std::to_string(n));
        o.require(s.empirical_pwin > theorem1_bound(n), "no separation at n=" + std::to_string(n));
    }
    if (o.pass) {
        o.detail = "P_win = 1 for n = 2..8";
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"AC1 symmetric optimum values", ac1},
        {"AC2 coherence bound soundness", ac2},
        {"AC3 duality region", ac3},
        {"AC4 discrimination solvers", ac4},
        {"AC5 Monte Carlo", ac5},
        {"AC6 cheating demo", ac6},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception &e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s [%.1f s] %s\n", out.pass ? "PASS" : "FAIL", name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
