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
 * Minimum-error state discrimination.
 *
 * Three independent routes to the optimal success probability:
 *  - maximize_gram_value: ascent over factorizations B = U sqrt(W) of the
 *    Gram matrix of a linearly independent pure ensemble, maximizing
 *    sum_i |B_ii|^2;
 *  - povm_fixed_point: a monotone fixed-point iteration over POVMs that
 *    also handles mixed and linearly dependent states;
 *  - symmetric_pd: the closed form for equiprobable pure states with one
 *    common real overlap.
 * certificate_residual checks the Holevo-Yuen-Kennedy-Lax optimality
 * conditions and is what lets a numerical value be called optimal.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "duality/interferometer.hpp"
#include "duality/matrix.hpp"
#include "duality/tolerances.hpp"

namespace duality {

/// Prior-weighted list of states of a common dimension.
struct Ensemble {
    std::vector<double> priors;
    std::vector<ComplexMatrix> states;

    Ensemble(std::vector<double> priors, std::vector<ComplexMatrix> states,
             const Tolerances &tol = kTol);

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
    [[nodiscard]] std::size_t dim() const noexcept {
        return states.front().dim();
    }
};

/// Pure states given as the columns of `vectors` (need not be normalized;
/// each column is normalized before use).
Ensemble pure_ensemble(std::vector<double> priors, const ComplexMatrix &vectors);

/// Bob's ensemble in the ways game: {rho_jj, |eta_j>}.
Ensemble ways_ensemble(const DensityMatrix &rho, const DetectorGram &s);

/// Alice's ensemble in the phases game: {1/n, rho_r}.
Ensemble phases_ensemble(const DensityMatrix &rho, const DetectorGram &s,
                         const PhaseSet &p);

struct Povm {
    std::vector<ComplexMatrix> elements;

    /// Throws InvalidState when an element is not PSD or the elements do not
    /// sum to the identity.
    void validate(const Tolerances &tol = kTol) const;
};

double success_probability(const Ensemble &e, const Povm &m);

/// max(||G - G†||_F, max_j [lambda_min((G + G†)/2 - p_j rho_j)]_-) with
/// G = sum_i p_i rho_i Pi_i. Zero iff m is optimal.
double certificate_residual(const Ensemble &e, const Povm &m);

/// W_ij = sqrt(rho_ii rho_jj) S_ij.
ComplexMatrix ways_gram(const DensityMatrix &rho, const DetectorGram &s);

/// [(sqrt(1 + (n-1)s) + (n-1) sqrt(1-s)) / n]^2
double symmetric_pd(std::size_t n, double s);

struct GramAscentOptions {
    int restarts = 32;
    std::uint64_t seed = 0;
    double tol = 1e-12;      // |delta f| that counts as a stalled step
    int patience = 5;        // consecutive stalled steps before stopping
    int max_steps = 20000;   // per restart
    double certificate_tol = 1e-8;
    int polish_steps = 4000; // majorization steps on the best restart
    unsigned threads = 1;    // restarts run concurrently when > 1
};

struct GramFactor {
    ComplexMatrix w;
    ComplexMatrix b;       // b = u sqrt(w), so b† b = w
    ComplexMatrix u;
    double value = 0.0;    // sum_i |b_ii|^2
    double certificate = 0.0;
    bool certified = false;
    int best_restart = 0;
    int steps = 0;
};

/// Restart 0 starts from U = I (the square-root measurement); the others
/// from Haar-random unitaries drawn from stream `seed ^ restart`. The best
/// restart is then polished until its certificate passes. Throws
/// Singular when w has an eigenvalue below `gram_singular`.
GramFactor maximize_gram_value(const ComplexMatrix &w,
                               const GramAscentOptions &opts = {},
                               const Tolerances &tol = kTol);

/// The pure ensemble and projective measurement a GramFactor describes, in
/// the representation |eta~_j> = column j of sqrt(W).
Ensemble gram_ensemble(const ComplexMatrix &w);
Povm gram_povm(const GramFactor &g);

struct PovmSolution {
    Povm povm;
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> history; // success value after every accepted step
};

/// Pretty-good (square-root) measurement, rho_bar^{-1/2} p_i rho_i
/// rho_bar^{-1/2}, completed on the kernel of rho_bar by an even split.
PovmSolution pgm(const Ensemble &e);

struct FixedPointOptions {
    int max_iter = 10000;
    double tol = 1e-9;
    int check_every = 5;
};

/// Starts from the PGM and iterates
///   Pi_i <- G^{-1/2} E_i Pi_i E_i G^{-1/2},  G = sum_j E_j Pi_j E_j,
/// with E_i = p_i rho_i. A step is accepted only if the success value does
/// not drop; otherwise E_i is damped to p_i rho_i + mu I with growing mu,
/// which makes the step arbitrarily short and, to first order, ascending.
/// Stops when certificate_residual <= tol. Unconverged runs return the best
/// iterate with converged = false.
PovmSolution povm_fixed_point(const Ensemble &e,
                              const FixedPointOptions &opts = {});

/// sqrt(sum_i ||rho_i - sigma_i||_F^2)
double ensemble_distance(const Ensemble &a, const Ensemble &b);

/// Largest |P_d(e) - P_d(e')| / ||e - e'|| over `trials` random Hermitian
/// perturbations of Frobenius size <= eps per state, each re-projected to a
/// density matrix. P_d is evaluated with povm_fixed_point.
double continuity_probe(const Ensemble &e, double eps, int trials,
                        std::uint64_t seed,
                        const FixedPointOptions &opts = {});

/// A measurement strategy reduced to what a simulation needs: the
/// conditional outcome distribution for every ensemble member.
struct Strategy {
    double value = 0.0;
    std::size_t states = 0;
    std::size_t outcomes = 0;
    std::vector<double> table; // table[i * outcomes + k] = P(k | state i)
    std::string method;
    double residual = 0.0;

    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {table.data() + i * outcomes, outcomes};
    }
};

struct StrategyOptions {
    GramAscentOptions gram{};
    FixedPointOptions fixed{};
};

/// Bob's optimal detector measurement. Uses the Gram ascent when W is
/// nonsingular and the fixed-point solver otherwise.
Strategy ways_strategy(const DensityMatrix &rho, const DetectorGram &s,
                       const StrategyOptions &opts = {});

/// Alice's phase measurement. If the phases are canonical and every
/// rho_jk S_kj is real and nonnegative, the Fourier-basis measurement is
/// used (it reaches X + 1/n); otherwise the fixed-point solver.
Strategy phases_strategy(const DensityMatrix &rho, const DetectorGram &s,
                         const PhaseSet &p, const StrategyOptions &opts = {});

/// Projectors onto f_g = n^{-1/2} sum_j e^{2 pi i g j / n} |j>.
Povm fourier_povm(std::size_t n);

} // namespace duality
