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

#include "duality/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "duality/discrimination.hpp"
#include "duality/duality.hpp"
#include "duality/error.hpp"
#include "duality/game.hpp"
#include "duality/kernels.hpp"
#include "duality/linalg.hpp"
#include "duality/rng.hpp"
#include "duality/sampler.hpp"
#include "duality/serialize.hpp"
#include "json.hpp"

namespace duality {

namespace {

using Check = std::function<std::string(std::uint64_t)>; // "" on success

std::string expect(bool ok, const std::string &what) {
    return ok ? std::string() : what;
}

std::string near(double got, double want, double tol, const char *what) {
    if (std::abs(got - want) <= tol) {
        return {};
    }
    std::ostringstream s;
    s << what << ": got " << format_double(got) << ", want "
      << format_double(want) << " (tol " << tol << ')';
    return s.str();
}

ComplexMatrix random_hermitian(std::size_t n, CounterRng &rng) {
    return hermitian_part(ginibre(n, rng));
}

struct Suite {
    std::string name;
    std::vector<std::pair<std::string, Check>> checks;
};

std::vector<Suite> build_suites() {
    std::vector<Suite> all;

    all.push_back({"numerics",
                   {{"eig_reconstructs",
                     [](std::uint64_t seed) {
                         CounterRng rng(seed, 1);
                         const ComplexMatrix a = random_hermitian(7, rng);
                         const HermEig e = herm_eig(a);
                         const bool sorted = std::is_sorted(
                             e.values.rbegin(), e.values.rend());
                         return expect(sorted &&
                                           frobenius_distance(e.reconstruct(),
                                                              a) <= 1e-10,
                                       "eigendecomposition residual");
                     }},
                    {"psd_sqrt_squares",
                     [](std::uint64_t seed) {
                         CounterRng rng(seed, 2);
                         const ComplexMatrix g = ginibre(6, rng);
                         const ComplexMatrix a = adjoint_times(g, g);
                         const ComplexMatrix r = psd_sqrt(a);
                         return expect(frobenius_distance(r * r, a) <= 1e-9,
                                       "sqrt(A)^2 != A");
                     }},
                    {"polar_unitary",
                     [](std::uint64_t seed) {
                         CounterRng rng(seed, 3);
                         const ComplexMatrix u = polar_unitary(ginibre(6, rng));
                         return expect(unitarity_defect(u) <= 1e-10,
                                       "polar factor not unitary");
                     }},
                    {"kernel_variants_agree",
                     [](std::uint64_t seed) {
                         const kernels::KernelTable *fast = kernels::avx2_table();
                         if (fast == nullptr) {
                             return std::string();
                         }
                         CounterRng rng(seed, 4);
                         std::vector<cplx> x(37);
                         std::vector<cplx> y(37);
                         for (std::size_t i = 0; i < x.size(); ++i) {
                             x[i] = {rng.normal(), rng.normal()};
                             y[i] = {rng.normal(), rng.normal()};
                         }
                         const auto &ref = kernels::scalar_table();
                         const cplx a = ref.cdotc(x.data(), y.data(), x.size());
                         const cplx b = fast->cdotc(x.data(), y.data(), x.size());
                         return expect(std::abs(a - b) <= 1e-12 * (1 + std::abs(a)),
                                       "scalar and AVX2 cdotc differ");
                     }}}});

    all.push_back(
        {"interferometer",
         {{"reduced_is_partial_trace",
           [](std::uint64_t seed) {
               const PhysicalConfig c = sample_config(3, seed, 11);
               double worst = 0.0;
               for (std::size_t r = 0; r < 3; ++r) {
                   const ComplexMatrix a =
                       reduced_state(c.rho, c.s, c.phases, r).matrix();
                   const ComplexMatrix b = trace_out_detector(
                       joint_state(c.rho, c.s, c.phases, r).matrix(), 3);
                   worst = std::max(worst, frobenius_distance(a, b));
               }
               return expect(worst <= 1e-12, "reduced state mismatch");
           }},
          {"fourier_states_orthogonal",
           [](std::uint64_t) {
               const std::size_t n = 4;
               const DensityMatrix rho = maximally_coherent(n);
               const DetectorGram s = DetectorGram::identical(n);
               const PhaseSet p = PhaseSet::canonical(n);
               double worst = 0.0;
               for (std::size_t r = 0; r < n; ++r) {
                   for (std::size_t q = 0; q < n; ++q) {
                       const double overlap =
                           trace_product(reduced_state(rho, s, p, r).matrix(),
                                         reduced_state(rho, s, p, q).matrix())
                               .real();
                       worst = std::max(worst,
                                        std::abs(overlap - (r == q ? 1.0 : 0.0)));
                   }
               }
               return expect(worst <= 1e-12, "phase states not orthonormal");
           }}}});

    all.push_back(
        {"discrimination",
         {{"symmetric_solvers_agree",
           [](std::uint64_t seed) {
               for (std::size_t n : {2, 3, 4}) {
                   for (double s : {0.2, 0.5, 0.8}) {
                       const double want = symmetric_pd(n, s);
                       const DensityMatrix rho = maximally_coherent(n);
                       const DetectorGram g = DetectorGram::constant_overlap(n, s);
                       GramAscentOptions go;
                       go.seed = seed;
                       go.restarts = 4;
                       const GramFactor f = maximize_gram_value(ways_gram(rho, g), go);
                       const PovmSolution fp = povm_fixed_point(ways_ensemble(rho, g));
                       std::string e = near(f.value, want, 1e-6, "gram ascent");
                       if (e.empty()) e = near(fp.value, want, 1e-6, "fixed point");
                       if (e.empty() && (!f.certified || fp.residual > 1e-8)) {
                           e = "uncertified solution";
                       }
                       if (!e.empty()) {
                           return e + " at n=" + std::to_string(n);
                       }
                   }
               }
               return std::string();
           }},
          {"helstrom_two_states",
           [](std::uint64_t) {
               const double c = 0.6;
               ComplexMatrix v(2);
               v(0, 0) = 1.0;
               v(0, 1) = c;
               v(1, 1) = std::sqrt(1.0 - c * c);
               const Ensemble e = pure_ensemble({0.5, 0.5}, v);
               const PovmSolution sol = povm_fixed_point(e);
               return near(sol.value, 0.5 * (1.0 + std::sqrt(1.0 - c * c)),
                           1e-9, "two-state value");
           }}}});

    all.push_back(
        {"duality",
         {{"soundness_sample",
           [](std::uint64_t seed) {
               for (std::size_t n = 2; n <= 4; ++n) {
                   SweepOptions o;
                   o.n = n;
                   o.count = 150;
                   o.seed = seed;
                   const SweepResult r = soundness_sweep(o);
                   if (r.max_lhs_upper > 1e-8 || r.max_region_excess > 1e-8 ||
                       r.max_x_gap > 1e-12) {
                       return "bound violated at n=" + std::to_string(n);
                   }
               }
               return std::string();
           }},
          {"symmetric_family_on_ellipse",
           [](std::uint64_t) {
               double worst = 0.0;
               for (std::size_t n = 2; n <= 8; ++n) {
                   for (int k = 0; k < 100; ++k) {
                       const DualityPoint p = symmetric_family_point(n, k / 99.0);
                       worst = std::max(worst,
                                        std::abs(ellipse_form(p.x, p.y, n) - 1.0));
                   }
               }
               return expect(worst <= 1e-8, "symmetric family off the ellipse");
           }},
          {"theorem1_on_boundary",
           [](std::uint64_t) {
               for (std::size_t n = 2; n <= 9; ++n) {
                   const double pd = theorem1_bound(n);
                   const DualityPoint p = to_xy_operational(pd, pd, n);
                   const Membership m = region_membership(p);
                   if (!m.member || std::abs(m.ellipse_excess) > 1e-9) {
                       return "not on boundary at n=" + std::to_string(n);
                   }
               }
               return std::string();
           }}}});

    all.push_back(
        {"game",
         {{"thread_count_independent",
           [](std::uint64_t seed) {
               GameConfig a = theorem1_config(3, 20000, seed);
               GameConfig b = a;
               b.threads = 4;
               return expect(run_combined(a) == run_combined(b),
                             "counters depend on thread count");
           }},
          {"theorem1_rate",
           [](std::uint64_t seed) {
               const GameStats s = run_combined(theorem1_config(2, 100000, seed));
               std::string e = near(s.analytic_pwin, theorem1_bound(2), 1e-6,
                                    "analytic P_win");
               if (e.empty() && !s.consistent()) {
                   e = "empirical rate outside 4 sigma";
               }
               return e;
           }},
          {"cheat_wins",
           [](std::uint64_t seed) {
               const GameStats s = cheat_unrestricted(theorem1_config(4, 5000, seed));
               return expect(s.empirical_pwin == 1.0 && s.analytic_pwin == 1.0,
                             "unrestricted Bob did not always win");
           }}}});

    all.push_back(
        {"cli",
         {{"csv_round_trip",
           [](std::uint64_t) {
               const std::vector<RegionRow> rows = boundary_rows(5);
               std::stringstream buf;
               write_region_csv(buf, rows);
               return expect(read_region_csv(buf) == rows,
                             "CSV did not round-trip");
           }},
          {"double_round_trip",
           [](std::uint64_t seed) {
               CounterRng rng(seed, 99);
               for (int i = 0; i < 1000; ++i) {
                   const double v = (rng.uniform() - 0.5) *
                                    std::ldexp(1.0, static_cast<int>(rng.below(80)) - 40);
                   if (parse_double(format_double(v)) != v) {
                       return "value " + format_double(v) + " did not round-trip";
                   }
               }
               return std::string();
           }}}});

    return all;
}

} // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed; });
}

std::string VerifyReport::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    j["seed"] = seed;
    j["passed"] = all_passed();
    nlohmann::json list = nlohmann::json::array();
    std::size_t failures = 0;
    for (const CheckResult &c : checks) {
        list.push_back({{"suite", c.suite},
                        {"check", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail}});
        failures += c.passed ? 0 : 1;
    }
    j["failures"] = failures;
    j["checks"] = std::move(list);
    return j.dump(2) + "\n";
}

const std::vector<std::string> &verify_suite_names() {
    static const std::vector<std::string> names = {
        "numerics", "interferometer", "discrimination", "duality", "game", "cli"};
    return names;
}

VerifyReport run_verify(std::uint64_t seed,
                        const std::vector<std::string> &suites) {
    for (const std::string &s : suites) {
        const auto &names = verify_suite_names();
        DUALITY_REQUIRE(std::find(names.begin(), names.end(), s) != names.end(),
                        ErrorCode::OutOfRange, "unknown suite '" + s + "'");
    }
    VerifyReport report;
    report.seed = seed;
    for (const Suite &suite : build_suites()) {
        if (!suites.empty() &&
            std::find(suites.begin(), suites.end(), suite.name) == suites.end()) {
            continue;
        }
        for (const auto &[name, check] : suite.checks) {
            CheckResult r{suite.name, name, false, {}};
            try {
                r.detail = check(seed);
                r.passed = r.detail.empty();
            } catch (const std::exception &e) {
                r.detail = std::string("exception: ") + e.what();
            }
            report.checks.push_back(std::move(r));
        }
    }
    return report;
}

} // namespace duality
