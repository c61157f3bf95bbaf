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

#include "duality/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "duality/error.hpp"
#include "duality/linalg.hpp"
#include "duality/rng.hpp"

namespace duality {

namespace {

ComplexMatrix wishart(std::size_t n, std::size_t rank, CounterRng &rng) {
    ComplexMatrix g = ginibre(n, rng);
    for (std::size_t i = rank; i < n; ++i) {
        for (cplx &z : g.row(i)) {
            z = 0.0;
        }
    }
    return hermitian_part(adjoint_times(g, g));
}

} // namespace

PhysicalConfig sample_config(std::size_t n, std::uint64_t seed,
                             std::uint64_t index) {
    DUALITY_REQUIRE(n >= 2, ErrorCode::InvalidDim, "need n >= 2");
    CounterRng rng(seed, index);

    const std::size_t rho_rank = 1 + rng.below(n);
    ComplexMatrix rho = wishart(n, rho_rank, rng);
    rho *= cplx{1.0 / trace(rho).real()};
    const double lambda = rng.uniform();
    rho = rho * cplx{1.0 - lambda} +
          ComplexMatrix::constant(n, lambda / static_cast<double>(n));

    const std::size_t s_rank =
        rng.uniform() < 0.75 ? n : 1 + rng.below(n - 1);
    ComplexMatrix s = wishart(n, s_rank, rng);
    std::vector<double> scale(n);
    for (std::size_t j = 0; j < n; ++j) {
        scale[j] = 1.0 / std::sqrt(s(j, j).real());
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            s(j, k) *= scale[j] * scale[k];
        }
    }
    const double mu = rng.uniform();
    s = s * cplx{1.0 - mu} + ComplexMatrix::constant(n, mu);
    for (std::size_t j = 0; j < n; ++j) {
        s(j, j) = 1.0;
    }
    return {DensityMatrix(hermitian_part(rho)), DetectorGram(std::move(s)),
            PhaseSet::canonical(n)};
}

CertifiedValue ways_value(const DensityMatrix &rho, const DetectorGram &s,
                          double certificate_tol) {
    const auto finish = [&](double value, double residual, const char *how) {
        const double d = static_cast<double>(rho.dim());
        return CertifiedValue{value, std::min(1.0, value + d * residual),
                              residual, residual <= certificate_tol, how};
    };
    const ComplexMatrix w = ways_gram(rho, s);
    if (min_eigenvalue(w) >= kTol.gram_singular) {
        GramAscentOptions quick;
        quick.restarts = 1;
        quick.max_steps = 0;
        quick.polish_steps = 2000;
        quick.certificate_tol = certificate_tol;
        GramFactor g = maximize_gram_value(w, quick);
        if (!g.certified) {
            GramAscentOptions full;
            full.certificate_tol = certificate_tol;
            GramFactor h = maximize_gram_value(w, full);
            if (h.certified || h.certificate < g.certificate) {
                g = std::move(h);
            }
        }
        if (g.certified) {
            return finish(g.value, g.certificate, "gram-ascent");
        }
    }
    FixedPointOptions opts;
    opts.tol = certificate_tol;
    const PovmSolution sol = povm_fixed_point(ways_ensemble(rho, s), opts);
    return finish(sol.value, sol.residual, "fixed-point");
}

CertifiedValue phases_value(const DensityMatrix &rho, const DetectorGram &s,
                            const PhaseSet &p, const FixedPointOptions &opts) {
    StrategyOptions so;
    so.fixed = opts;
    const Strategy st = phases_strategy(rho, s, p, so);
    const double d = static_cast<double>(rho.dim());
    return {st.value, std::min(1.0, st.value + d * st.residual), st.residual,
            st.residual <= opts.tol, st.method};
}

ConfigEvaluation evaluate_config(const PhysicalConfig &cfg,
                                 const FixedPointOptions &phase_opts) {
    const std::size_t n = cfg.rho.dim();
    ConfigEvaluation ev;
    ev.x_coh = coherence_x(cfg.rho, cfg.s);
    const CertifiedValue pd = ways_value(cfg.rho, cfg.s);
    ev.pd = pd.value;
    ev.pd_certified = pd.certified;
    ev.pph = phases_value(cfg.rho, cfg.s, cfg.phases, phase_opts).value;
    const double inv = 1.0 / static_cast<double>(n);
    const double pd_clamped = std::clamp(ev.pd, inv, 1.0);
    const double pph_clamped = std::clamp(ev.pph, inv, 1.0);
    ev.lhs = lemma1_lhs(ev.x_coh, pd_clamped, n);
    ev.lhs_upper = lemma1_lhs(ev.x_coh, std::clamp(pd.upper, inv, 1.0), n);
    ev.coherence_point = to_xy(ev.x_coh, pd_clamped, n);
    ev.operational_point = to_xy_operational(pph_clamped, pd_clamped, n);
    ev.region_excess = region_excess(ev.operational_point);
    return ev;
}

SweepResult soundness_sweep(const SweepOptions &opts) {
    std::vector<ConfigEvaluation> evals(opts.count);
    parallel_for(opts.count, opts.threads, [&](std::size_t i) {
        evals[i] = evaluate_config(sample_config(opts.n, opts.seed, i),
                                   opts.phase_opts);
    });
    SweepResult r;
    r.count = opts.count;
    for (std::size_t i = 0; i < evals.size(); ++i) {
        const ConfigEvaluation &ev = evals[i];
        const double lhs = ev.lhs + opts.lhs_offset;
        if (i == 0 || lhs > r.max_lhs) {
            r.max_lhs = lhs;
            r.worst_lhs_index = i;
        }
        r.max_lhs_upper =
            std::max(r.max_lhs_upper, ev.lhs_upper + opts.lhs_offset);
        if (i == 0 || ev.region_excess > r.max_region_excess) {
            r.max_region_excess = ev.region_excess;
            r.worst_region_index = i;
        }
        r.max_x_gap = std::max(r.max_x_gap, ev.operational_point.x -
                                                ev.coherence_point.x);
        if (!ev.pd_certified) {
            ++r.uncertified;
        }
    }
    return r;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &body) {
    const unsigned workers = static_cast<unsigned>(
        std::max<std::size_t>(1, std::min<std::size_t>(threads, count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += workers) {
                    body(i);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(guard);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace duality
