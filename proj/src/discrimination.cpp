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

#include "duality/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <thread>

#include "duality/error.hpp"
#include "duality/kernels.hpp"
#include "duality/linalg.hpp"
#include "duality/rng.hpp"

namespace duality {

namespace {

ComplexMatrix outer(std::span<const cplx> v) {
    const std::size_t n = v.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

std::vector<cplx> column(const ComplexMatrix &m, std::size_t j) {
    std::vector<cplx> v(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        v[i] = m(i, j);
    }
    return v;
}

// Clamps round-off negatives and renormalizes one conditional distribution.
void finalize_row(std::span<double> row) {
    double total = 0.0;
    for (double &p : row) {
        DUALITY_REQUIRE(p >= -kTol.probability_renorm, ErrorCode::OutOfRange,
                        "negative outcome probability " + std::to_string(p));
        p = p < 1e-15 ? 0.0 : p;
        total += p;
    }
    DUALITY_REQUIRE(std::abs(total - 1.0) <= kTol.probability_renorm,
                    ErrorCode::OutOfRange,
                    "outcome probabilities sum to " + std::to_string(total));
    for (double &p : row) {
        p /= total;
    }
}

Strategy strategy_from_povm(const Ensemble &e, const Povm &m, double value,
                            double residual, std::string method) {
    Strategy s;
    s.value = value;
    s.states = e.size();
    s.outcomes = m.elements.size();
    s.table.resize(s.states * s.outcomes);
    s.residual = residual;
    s.method = std::move(method);
    for (std::size_t i = 0; i < s.states; ++i) {
        for (std::size_t k = 0; k < s.outcomes; ++k) {
            s.table[i * s.outcomes + k] =
                trace_product(m.elements[k], e.states[i]).real();
        }
        finalize_row({s.table.data() + i * s.outcomes, s.outcomes});
    }
    return s;
}

} // namespace

Ensemble::Ensemble(std::vector<double> p, std::vector<ComplexMatrix> s,
                   const Tolerances &tol)
    : priors(std::move(p)), states(std::move(s)) {
    DUALITY_REQUIRE(!states.empty(), ErrorCode::InvalidDim, "empty ensemble");
    DUALITY_REQUIRE(priors.size() == states.size(), ErrorCode::DimMismatch,
                    "priors and states differ in length");
    double total = 0.0;
    for (double v : priors) {
        DUALITY_REQUIRE(v >= 0.0 && std::isfinite(v), ErrorCode::InvalidState,
                        "negative or non-finite prior");
        total += v;
    }
    DUALITY_REQUIRE(std::abs(total - 1.0) <= tol.prior_sum,
                    ErrorCode::InvalidState,
                    "priors sum to " + std::to_string(total));
    const std::size_t d = states.front().dim();
    for (const ComplexMatrix &rho : states) {
        DUALITY_REQUIRE(rho.dim() == d && d > 0, ErrorCode::DimMismatch,
                        "ensemble states differ in dimension");
        DUALITY_REQUIRE(rho.all_finite(), ErrorCode::InvalidState,
                        "non-finite state entries");
        DUALITY_REQUIRE(hermiticity_defect(rho) <= tol.state_hermitian,
                        ErrorCode::InvalidState, "state not Hermitian");
        DUALITY_REQUIRE(std::abs(trace(rho) - 1.0) <= tol.state_trace,
                        ErrorCode::InvalidState, "state trace differs from 1");
    }
}

Ensemble pure_ensemble(std::vector<double> priors,
                       const ComplexMatrix &vectors) {
    std::vector<ComplexMatrix> states;
    states.reserve(vectors.dim());
    for (std::size_t j = 0; j < vectors.dim(); ++j) {
        std::vector<cplx> v = column(vectors, j);
        const double norm = std::sqrt(kernels::norm_sq(v));
        DUALITY_REQUIRE(norm > 0.0, ErrorCode::InvalidState,
                        "zero state vector");
        for (cplx &z : v) {
            z /= norm;
        }
        states.push_back(outer(v));
    }
    return {std::move(priors), std::move(states)};
}

Ensemble ways_ensemble(const DensityMatrix &rho, const DetectorGram &s) {
    const std::size_t n = rho.dim();
    DUALITY_REQUIRE(n == s.dim(), ErrorCode::DimMismatch, "state vs Gram");
    std::vector<double> priors(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        priors[j] = std::max(rho(j, j).real(), 0.0);
        total += priors[j];
    }
    for (double &p : priors) {
        p /= total;
    }
    return pure_ensemble(std::move(priors), s.vectors());
}

Ensemble phases_ensemble(const DensityMatrix &rho, const DetectorGram &s,
                         const PhaseSet &p) {
    const std::size_t n = rho.dim();
    std::vector<ComplexMatrix> states;
    states.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        states.push_back(reduced_state(rho, s, p, r).matrix());
    }
    return {std::vector<double>(n, 1.0 / static_cast<double>(n)),
            std::move(states)};
}

void Povm::validate(const Tolerances &tol) const {
    DUALITY_REQUIRE(!elements.empty(), ErrorCode::InvalidDim, "empty POVM");
    const std::size_t d = elements.front().dim();
    ComplexMatrix total(d);
    for (const ComplexMatrix &el : elements) {
        DUALITY_REQUIRE(el.dim() == d, ErrorCode::DimMismatch,
                        "POVM elements differ in dimension");
        DUALITY_REQUIRE(min_eigenvalue(el) >= -tol.psd_floor,
                        ErrorCode::InvalidState, "POVM element not PSD");
        total += el;
    }
    DUALITY_REQUIRE(frobenius_distance(total, ComplexMatrix::identity(d)) <=
                        tol.povm_sum,
                    ErrorCode::InvalidState,
                    "POVM elements do not sum to the identity");
}

double success_probability(const Ensemble &e, const Povm &m) {
    DUALITY_REQUIRE(m.elements.size() == e.size(), ErrorCode::DimMismatch,
                    "POVM outcomes vs ensemble size");
    double acc = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        acc += e.priors[i] * trace_product(m.elements[i], e.states[i]).real();
    }
    return acc;
}

double certificate_residual(const Ensemble &e, const Povm &m) {
    DUALITY_REQUIRE(m.elements.size() == e.size(), ErrorCode::DimMismatch,
                    "POVM outcomes vs ensemble size");
    const std::size_t d = e.dim();
    ComplexMatrix gamma(d);
    for (std::size_t i = 0; i < e.size(); ++i) {
        DUALITY_REQUIRE(m.elements[i].dim() == d, ErrorCode::DimMismatch,
                        "POVM element vs state dimension");
        gamma += (e.states[i] * m.elements[i]) * cplx{e.priors[i]};
    }
    double residual = hermiticity_defect(gamma);
    const ComplexMatrix sym = hermitian_part(gamma);
    for (std::size_t j = 0; j < e.size(); ++j) {
        const double lmin =
            min_eigenvalue(sym - e.states[j] * cplx{e.priors[j]});
        residual = std::max(residual, -lmin);
    }
    return residual;
}

ComplexMatrix ways_gram(const DensityMatrix &rho, const DetectorGram &s) {
    const std::size_t n = rho.dim();
    DUALITY_REQUIRE(n == s.dim(), ErrorCode::DimMismatch, "state vs Gram");
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(i, j) = std::sqrt(std::max(rho(i, i).real(), 0.0) *
                                std::max(rho(j, j).real(), 0.0)) *
                      s(i, j);
        }
    }
    return w;
}

double symmetric_pd(std::size_t n, double s) {
    DUALITY_REQUIRE(n >= 2, ErrorCode::OutOfRange, "need n >= 2");
    DUALITY_REQUIRE(s >= 0.0 && s <= 1.0, ErrorCode::OutOfRange,
                    "overlap " + std::to_string(s) + " outside [0, 1]");
    const double nd = static_cast<double>(n);
    const double amp =
        (std::sqrt(1.0 + (nd - 1.0) * s) + (nd - 1.0) * std::sqrt(1.0 - s)) /
        nd;
    return amp * amp;
}

// ---------------------------------------------------------------------------
// Gram-fiber ascent

namespace {

// f(U) = sum_i |(U R)_ii|^2 and z_i = (U R)_ii. With R Hermitian,
// (U R)_ii = sum_k U_ik conj(R_ik).
double gram_objective(const ComplexMatrix &u, const ComplexMatrix &r,
                      std::vector<cplx> &z) {
    const auto &k = kernels::active();
    double f = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        z[i] = k.cdotc(r.row(i).data(), u.row(i).data(), u.dim());
        f += std::norm(z[i]);
    }
    return f;
}

struct AscentRun {
    ComplexMatrix u;
    double value = 0.0;
    int steps = 0;
};

AscentRun ascend(ComplexMatrix u, const ComplexMatrix &r,
                 const GramAscentOptions &opts) {
    const std::size_t n = r.dim();
    std::vector<cplx> z(n);
    std::vector<cplx> zc(n);
    double f = gram_objective(u, r, z);
    int stalled = 0;
    int step = 0;
    for (; step < opts.max_steps; ++step) {
        // Euclidean gradient with respect to conj(U): diag(z) R.
        ComplexMatrix grad = r;
        for (std::size_t i = 0; i < n; ++i) {
            for (cplx &v : grad.row(i)) {
                v *= z[i];
            }
        }
        bool accepted = false;
        double alpha = 1.0;
        ComplexMatrix cand;
        double fc = f;
        for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
            try {
                cand = polar_unitary(u + grad * cplx{alpha});
            } catch (const Error &e) {
                if (e.code() == ErrorCode::Singular) {
                    continue;
                }
                throw;
            }
            fc = gram_objective(cand, r, zc);
            if (fc > f) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            break;
        }
        const double delta = fc - f;
        u = std::move(cand);
        f = fc;
        z.swap(zc);
        stalled = delta < opts.tol ? stalled + 1 : 0;
        if (stalled >= opts.patience) {
            ++step;
            break;
        }
    }
    return {std::move(u), f, step};
}

} // namespace

Ensemble gram_ensemble(const ComplexMatrix &w) {
    const ComplexMatrix r = psd_sqrt(w);
    std::vector<double> priors(w.dim());
    double total = 0.0;
    for (std::size_t j = 0; j < w.dim(); ++j) {
        priors[j] = w(j, j).real();
        total += priors[j];
    }
    for (double &p : priors) {
        p /= total;
    }
    return pure_ensemble(std::move(priors), r);
}

Povm gram_povm(const GramFactor &g) {
    const std::size_t n = g.u.dim();
    Povm m;
    m.elements.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<cplx> v(n);
        for (std::size_t l = 0; l < n; ++l) {
            v[l] = std::conj(g.u(k, l));
        }
        m.elements.push_back(outer(v));
    }
    return m;
}

GramFactor maximize_gram_value(const ComplexMatrix &w,
                               const GramAscentOptions &opts,
                               const Tolerances &tol) {
    DUALITY_REQUIRE(!w.empty(), ErrorCode::InvalidDim, "empty Gram matrix");
    DUALITY_REQUIRE(opts.restarts >= 1, ErrorCode::OutOfRange,
                    "need at least one restart");
    DUALITY_REQUIRE(std::abs(trace(w) - 1.0) <= 1e-9, ErrorCode::InvalidState,
                    "Gram matrix trace must be 1");
    const HermEig eig = herm_eig(w, tol);
    DUALITY_REQUIRE(eig.values.back() >= -tol.psd_floor, ErrorCode::NotPsd,
                    "Gram matrix eigenvalue " +
                        std::to_string(eig.values.back()));
    DUALITY_REQUIRE(eig.values.back() >= tol.gram_singular,
                    ErrorCode::Singular,
                    "Gram matrix numerically singular (lambda_min = " +
                        std::to_string(eig.values.back()) + ")");
    const ComplexMatrix r = apply_function(
        eig, [](double v) { return std::sqrt(std::max(v, 0.0)); });
    const std::size_t n = w.dim();

    const auto restarts = static_cast<std::size_t>(opts.restarts);
    std::vector<AscentRun> runs(restarts);
    auto run_one = [&](std::size_t idx) {
        ComplexMatrix u0 = ComplexMatrix::identity(n);
        if (idx > 0) {
            CounterRng rng(opts.seed ^ static_cast<std::uint64_t>(idx));
            u0 = random_unitary(n, rng);
        }
        runs[idx] = ascend(std::move(u0), r, opts);
    };
    const unsigned workers =
        std::max(1U, std::min<unsigned>(opts.threads,
                                        static_cast<unsigned>(restarts)));
    if (workers == 1) {
        for (std::size_t i = 0; i < restarts; ++i) {
            run_one(i);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < restarts; i += workers) {
                    run_one(i);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < restarts; ++i) {
        if (runs[i].value > runs[best].value) {
            best = i;
        }
    }

    GramFactor g;
    g.w = w;
    g.u = std::move(runs[best].u);
    g.best_restart = static_cast<int>(best);
    for (const AscentRun &run : runs) {
        g.steps += run.steps;
    }
    const Ensemble ens = gram_ensemble(w);
    g.certificate = certificate_residual(ens, gram_povm(g));

    // Polish: U <- polar(diag(z) R). f is convex in U, so this
    // majorization step never lowers it, and unlike the line search it
    // keeps contracting once f differences drop below round-off.
    std::vector<cplx> z(n);
    double f = gram_objective(g.u, r, z);
    for (int step = 1; step <= opts.polish_steps &&
                       g.certificate > opts.certificate_tol * 1e-2;
         ++step) {
        ComplexMatrix grad = r;
        for (std::size_t i = 0; i < n; ++i) {
            for (cplx &v : grad.row(i)) {
                v *= z[i];
            }
        }
        ComplexMatrix next;
        try {
            next = polar_unitary(grad);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Singular) {
                throw;
            }
            break;
        }
        std::vector<cplx> zn(n);
        const double fn = gram_objective(next, r, zn);
        if (fn < f - 1e-14) {
            break;
        }
        g.u = std::move(next);
        f = std::max(f, fn);
        z.swap(zn);
        ++g.steps;
        if (step % 4 == 0 || step == opts.polish_steps) {
            g.certificate = certificate_residual(ens, gram_povm(g));
        }
    }
    g.b = g.u * r;
    g.value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        g.value += std::norm(g.b(i, i));
    }
    g.certificate = certificate_residual(ens, gram_povm(g));
    g.certified = g.certificate <= opts.certificate_tol;
    return g;
}

// ---------------------------------------------------------------------------
// POVM solvers

PovmSolution pgm(const Ensemble &e) {
    const std::size_t d = e.dim();
    const std::size_t m = e.size();
    ComplexMatrix avg(d);
    for (std::size_t i = 0; i < m; ++i) {
        avg += e.states[i] * cplx{e.priors[i]};
    }
    const SupportInverseSqrt root = psd_inv_sqrt(avg);
    DUALITY_REQUIRE(root.rank > 0, ErrorCode::DegenerateEnsemble,
                    "average state is zero");
    const ComplexMatrix remainder =
        (ComplexMatrix::identity(d) - root.projector) *
        cplx{1.0 / static_cast<double>(m)};

    PovmSolution sol;
    sol.povm.elements.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ComplexMatrix el = hermitian_part(
            root.inv_sqrt * (e.states[i] * cplx{e.priors[i]}) * root.inv_sqrt);
        el += remainder;
        sol.povm.elements.push_back(std::move(el));
    }
    sol.value = success_probability(e, sol.povm);
    sol.residual = certificate_residual(e, sol.povm);
    sol.converged = sol.residual <= 1e-9;
    sol.history.push_back(sol.value);
    return sol;
}

namespace {

// Round-off allowance on the monotone acceptance test. Without it the
// iteration stalls once value changes drop below one ulp, long before the
// certificate is met.
constexpr double kMonotoneSlack = 1e-12;

std::vector<ComplexMatrix> fixed_point_step(const std::vector<ComplexMatrix> &pi,
                                            const std::vector<ComplexMatrix> &a,
                                            double mu) {
    const std::size_t d = a.front().dim();
    const std::size_t m = a.size();
    const ComplexMatrix shift = ComplexMatrix::identity(d) * cplx{mu};
    std::vector<ComplexMatrix> weighted(m);
    ComplexMatrix total(d);
    for (std::size_t i = 0; i < m; ++i) {
        const ComplexMatrix e = mu > 0.0 ? a[i] + shift : a[i];
        weighted[i] = hermitian_part(e * pi[i] * e);
        total += weighted[i];
    }
    const SupportInverseSqrt root = psd_inv_sqrt(hermitian_part(total));
    const ComplexMatrix remainder =
        (ComplexMatrix::identity(d) - root.projector) *
        cplx{1.0 / static_cast<double>(m)};
    std::vector<ComplexMatrix> next(m);
    for (std::size_t i = 0; i < m; ++i) {
        next[i] =
            hermitian_part(root.inv_sqrt * weighted[i] * root.inv_sqrt) +
            remainder;
    }
    return next;
}

} // namespace

PovmSolution povm_fixed_point(const Ensemble &e,
                              const FixedPointOptions &opts) {
    PovmSolution sol = pgm(e);
    sol.converged = false;
    const std::size_t m = e.size();
    std::vector<ComplexMatrix> a(m);
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        a[i] = e.states[i] * cplx{e.priors[i]};
        scale = std::max(scale, frobenius_norm(a[i]));
    }
    const double mu0 = scale / 16.0;
    const int check_every = std::max(1, opts.check_every);

    if (sol.residual <= opts.tol) {
        sol.converged = true;
        return sol;
    }
    bool residual_fresh = true;
    for (int it = 0; it < opts.max_iter; ++it) {
        bool accepted = false;
        for (int attempt = 0; attempt < 48 && !accepted; ++attempt) {
            const double mu =
                attempt == 0 ? 0.0 : mu0 * std::ldexp(1.0, attempt - 1);
            Povm cand{fixed_point_step(sol.povm.elements, a, mu)};
            const double value = success_probability(e, cand);
            if (value >= sol.value - kMonotoneSlack) {
                sol.povm = std::move(cand);
                sol.value = value;
                accepted = true;
            }
        }
        if (!accepted) {
            break; // no ascending step left at double precision
        }
        sol.iterations = it + 1;
        sol.history.push_back(sol.value);
        residual_fresh = false;
        if (sol.iterations % check_every == 0) {
            sol.residual = certificate_residual(e, sol.povm);
            residual_fresh = true;
            if (sol.residual <= opts.tol) {
                sol.converged = true;
                return sol;
            }
        }
    }
    if (!residual_fresh) {
        sol.residual = certificate_residual(e, sol.povm);
    }
    sol.converged = sol.residual <= opts.tol;
    return sol;
}

double ensemble_distance(const Ensemble &a, const Ensemble &b) {
    DUALITY_REQUIRE(a.size() == b.size(), ErrorCode::DimMismatch,
                    "ensemble sizes differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = frobenius_distance(a.states[i], b.states[i]);
        acc += d * d;
    }
    return std::sqrt(acc);
}

double continuity_probe(const Ensemble &e, double eps, int trials,
                        std::uint64_t seed, const FixedPointOptions &opts) {
    DUALITY_REQUIRE(eps > 0.0, ErrorCode::OutOfRange, "eps must be positive");
    const double base = povm_fixed_point(e, opts).value;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<std::uint64_t>(t));
        std::vector<ComplexMatrix> perturbed;
        perturbed.reserve(e.size());
        for (const ComplexMatrix &rho : e.states) {
            ComplexMatrix h = hermitian_part(ginibre(rho.dim(), rng));
            const double size = eps * (1.0 - rng.uniform());
            h *= cplx{size / frobenius_norm(h)};
            perturbed.push_back(project_to_density(rho + h));
        }
        const Ensemble other(e.priors, std::move(perturbed));
        const double dist = ensemble_distance(e, other);
        if (dist <= 0.0) {
            continue;
        }
        const double value = povm_fixed_point(other, opts).value;
        worst = std::max(worst, std::abs(value - base) / dist);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Strategies

Povm fourier_povm(std::size_t n) {
    Povm m;
    m.elements.reserve(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<cplx> f(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>((g * j) % n) /
                                 static_cast<double>(n);
            f[j] = std::polar(amp, angle);
        }
        m.elements.push_back(outer(f));
    }
    return m;
}

Strategy ways_strategy(const DensityMatrix &rho, const DetectorGram &s,
                       const StrategyOptions &opts) {
    const std::size_t n = rho.dim();
    const ComplexMatrix w = ways_gram(rho, s);
    if (min_eigenvalue(w) >= kTol.gram_singular) {
        const GramFactor g = maximize_gram_value(w, opts.gram);
        Strategy out;
        out.value = g.value;
        out.states = n;
        out.outcomes = n;
        out.table.resize(n * n);
        out.residual = g.certificate;
        out.method = "gram-ascent";
        for (std::size_t j = 0; j < n; ++j) {
            const double pj = rho(j, j).real();
            for (std::size_t b = 0; b < n; ++b) {
                out.table[j * n + b] = std::norm(g.b(b, j)) / pj;
            }
            finalize_row({out.table.data() + j * n, n});
        }
        return out;
    }
    const Ensemble e = ways_ensemble(rho, s);
    const PovmSolution sol = povm_fixed_point(e, opts.fixed);
    return strategy_from_povm(e, sol.povm, sol.value, sol.residual,
                              "fixed-point");
}

Strategy phases_strategy(const DensityMatrix &rho, const DetectorGram &s,
                         const PhaseSet &p, const StrategyOptions &opts) {
    const std::size_t n = rho.dim();
    const Ensemble e = phases_ensemble(rho, s, p);
    bool aligned = p.is_canonical();
    for (std::size_t j = 0; j < n && aligned; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx c = rho(j, k) * s(k, j);
            if (std::abs(c.imag()) > 1e-12 || c.real() < -1e-12) {
                aligned = false;
                break;
            }
        }
    }
    if (aligned) {
        const Povm f = fourier_povm(n);
        return strategy_from_povm(e, f, success_probability(e, f),
                                  certificate_residual(e, f), "fourier");
    }
    const PovmSolution sol = povm_fixed_point(e, opts.fixed);
    return strategy_from_povm(e, sol.povm, sol.value, sol.residual,
                              "fixed-point");
}

} // namespace duality
