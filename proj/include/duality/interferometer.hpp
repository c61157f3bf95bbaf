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
 * States of an n-path interferometer with path detectors.
 *
 * The particle starts in a density matrix rho on the path basis {|j>}. The
 * House applies one of n labelled phase sets, then a controlled unitary
 * |j>|0> -> |j>|eta_j> records the path in the detectors. Detector states
 * enter only through their Gram matrix S_jk = <eta_j|eta_k>.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "duality/matrix.hpp"
#include "duality/tolerances.hpp"

namespace duality {

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    /// Validates and stores. Throws InvalidState on any violated invariant.
    explicit DensityMatrix(ComplexMatrix m, const Tolerances &tol = kTol);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    const cplx &operator()(std::size_t j, std::size_t k) const noexcept {
        return m_(j, k);
    }

    /// True when every entry equals 1/n within `tol`.
    [[nodiscard]] bool is_maximally_coherent(double tol = 1e-12) const;

  private:
    ComplexMatrix m_;
};

/// Unit-diagonal PSD overlap matrix of the detector states.
class DetectorGram {
  public:
    explicit DetectorGram(ComplexMatrix s, const Tolerances &tol = kTol);

    /// <eta_j|eta_k> = s for all j != k.
    static DetectorGram constant_overlap(std::size_t n, double s);
    /// Orthogonal detector states.
    static DetectorGram orthogonal(std::size_t n);
    /// Identical detector states (S = all ones).
    static DetectorGram identical(std::size_t n);

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return s_; }
    [[nodiscard]] std::size_t dim() const noexcept { return s_.dim(); }
    const cplx &operator()(std::size_t j, std::size_t k) const noexcept {
        return s_(j, k);
    }

    /// Explicit detector states: column j of the Hermitian square root of S.
    [[nodiscard]] ComplexMatrix vectors() const;

  private:
    ComplexMatrix s_;
};

/// phases[r][j] = phi_r^j in radians, r labelling the House's choice.
class PhaseSet {
  public:
    PhaseSet(std::size_t n, std::vector<double> row_major);

    /// phi_r^j = 2 pi r j / n.
    static PhaseSet canonical(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    double operator()(std::size_t r, std::size_t j) const noexcept {
        return phases_[r * n_ + j];
    }
    [[nodiscard]] const std::vector<double> &row_major() const noexcept {
        return phases_;
    }
    [[nodiscard]] bool is_canonical(double tol = 1e-12) const;

  private:
    std::size_t n_;
    std::vector<double> phases_;
};

/// |psi><psi| with |psi> = n^{-1/2} sum_j |j>. Requires n >= 2.
DensityMatrix maximally_coherent(std::size_t n);

PhaseSet canonical_phases(std::size_t n);

/// U_r = sum_j e^{i phi_r^j} |j><j|.
ComplexMatrix phase_unitary(const PhaseSet &p, std::size_t r);

/// Particle-detector state after phases and the controlled unitary.
/// Index (j, m) of the n^2-dimensional space is j * n + m, particle first.
DensityMatrix joint_state(const DensityMatrix &rho, const DetectorGram &s,
                          const PhaseSet &p, std::size_t r);

/// Traces out the detector factor of an n^2-dimensional joint state.
ComplexMatrix trace_out_detector(const ComplexMatrix &joint, std::size_t n);

/// State Alice holds: entry (j,k) = e^{i(phi_r^j - phi_r^k)} rho_jk S_kj,
/// which equals trace_out_detector(joint_state(...)).
DensityMatrix reduced_state(const DensityMatrix &rho, const DetectorGram &s,
                            const PhaseSet &p, std::size_t r);

/// X = (1/n) sum_{j != k} |rho_jk S_kj|. Phase-independent.
double coherence_x(const DensityMatrix &rho, const DetectorGram &s);

/// Upper bound X + 1/n on Alice's phase-guessing probability.
double pph_upper(const DensityMatrix &rho, const DetectorGram &s);

} // namespace duality
