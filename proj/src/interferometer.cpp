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

#include "duality/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "duality/error.hpp"
#include "duality/linalg.hpp"

namespace duality {

namespace {

void require_dims(std::size_t a, std::size_t b, const char *what) {
    DUALITY_REQUIRE(a == b, ErrorCode::DimMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " +
                        std::to_string(b));
}

void require_index(std::size_t r, std::size_t n) {
    DUALITY_REQUIRE(r < n, ErrorCode::IndexOutOfRange,
                    "phase label " + std::to_string(r) + " with n = " +
                        std::to_string(n));
}

void require_paths(std::size_t n) {
    DUALITY_REQUIRE(n >= 2, ErrorCode::InvalidDim,
                    "need at least two paths, got " + std::to_string(n));
}

} // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, const Tolerances &tol)
    : m_(std::move(m)) {
    DUALITY_REQUIRE(!m_.empty(), ErrorCode::InvalidDim, "empty density matrix");
    DUALITY_REQUIRE(m_.all_finite(), ErrorCode::InvalidState,
                    "density matrix has non-finite entries");
    DUALITY_REQUIRE(hermiticity_defect(m_) <= tol.state_hermitian,
                    ErrorCode::InvalidState, "density matrix not Hermitian");
    const cplx tr = trace(m_);
    DUALITY_REQUIRE(std::abs(tr - 1.0) <= tol.state_trace,
                    ErrorCode::InvalidState,
                    "density matrix trace " + std::to_string(tr.real()));
    const std::size_t n = m_.dim();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const double bound =
                std::sqrt(std::max(m_(j, j).real(), 0.0) *
                          std::max(m_(k, k).real(), 0.0));
            DUALITY_REQUIRE(std::abs(m_(j, k)) <= bound + tol.state_hermitian,
                            ErrorCode::InvalidState,
                            "coherence exceeds populations");
        }
    }
    const double lmin = min_eigenvalue(m_, tol);
    DUALITY_REQUIRE(lmin >= -tol.psd_floor, ErrorCode::InvalidState,
                    "density matrix eigenvalue " + std::to_string(lmin));
    m_ = hermitian_part(m_);
}

bool DensityMatrix::is_maximally_coherent(double tol) const {
    const double target = 1.0 / static_cast<double>(dim());
    for (const cplx &z : m_.entries()) {
        if (std::abs(z - target) > tol) {
            return false;
        }
    }
    return true;
}

DetectorGram::DetectorGram(ComplexMatrix s, const Tolerances &tol)
    : s_(std::move(s)) {
    DUALITY_REQUIRE(!s_.empty(), ErrorCode::InvalidDim, "empty Gram matrix");
    DUALITY_REQUIRE(s_.all_finite(), ErrorCode::InvalidState,
                    "Gram matrix has non-finite entries");
    DUALITY_REQUIRE(hermiticity_defect(s_) <= tol.state_hermitian,
                    ErrorCode::InvalidState, "Gram matrix not Hermitian");
    const std::size_t n = s_.dim();
    for (std::size_t j = 0; j < n; ++j) {
        DUALITY_REQUIRE(std::abs(s_(j, j) - 1.0) <= tol.gram_diagonal,
                        ErrorCode::InvalidState,
                        "Gram diagonal must be 1 (detector states normalized)");
    }
    s_ = hermitian_part(s_);
    for (std::size_t j = 0; j < n; ++j) {
        s_(j, j) = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            DUALITY_REQUIRE(std::abs(s_(j, k)) <= 1.0 + tol.gram_diagonal,
                            ErrorCode::InvalidState, "overlap modulus above 1");
        }
    }
    const double lmin = min_eigenvalue(s_, tol);
    DUALITY_REQUIRE(lmin >= -tol.psd_floor * std::max(1.0, frobenius_norm(s_)),
                    ErrorCode::InvalidState,
                    "Gram matrix eigenvalue " + std::to_string(lmin));
}

DetectorGram DetectorGram::constant_overlap(std::size_t n, double s) {
    require_paths(n);
    DUALITY_REQUIRE(s >= 0.0 && s <= 1.0, ErrorCode::OutOfRange,
                    "overlap " + std::to_string(s) + " outside [0, 1]");
    ComplexMatrix m = ComplexMatrix::constant(n, s);
    for (std::size_t j = 0; j < n; ++j) {
        m(j, j) = 1.0;
    }
    return DetectorGram(std::move(m));
}

DetectorGram DetectorGram::orthogonal(std::size_t n) {
    return constant_overlap(n, 0.0);
}

DetectorGram DetectorGram::identical(std::size_t n) {
    return constant_overlap(n, 1.0);
}

ComplexMatrix DetectorGram::vectors() const { return psd_sqrt(s_); }

PhaseSet::PhaseSet(std::size_t n, std::vector<double> row_major)
    : n_(n), phases_(std::move(row_major)) {
    require_paths(n_);
    DUALITY_REQUIRE(phases_.size() == n_ * n_, ErrorCode::DimMismatch,
                    "phase set needs n*n entries");
    for (double v : phases_) {
        DUALITY_REQUIRE(std::isfinite(v), ErrorCode::InvalidState,
                        "non-finite phase");
    }
}

PhaseSet PhaseSet::canonical(std::size_t n) {
    require_paths(n);
    std::vector<double> phases(n * n);
    const double base = 2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            phases[r * n + j] = base * static_cast<double>(r * j);
        }
    }
    return {n, std::move(phases)};
}

bool PhaseSet::is_canonical(double tol) const {
    const PhaseSet ref = canonical(n_);
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        // compare on the circle
        const double d = std::remainder(phases_[i] - ref.phases_[i],
                                        2.0 * std::numbers::pi);
        if (std::abs(d) > tol) {
            return false;
        }
    }
    return true;
}

DensityMatrix maximally_coherent(std::size_t n) {
    require_paths(n);
    return DensityMatrix(
        ComplexMatrix::constant(n, 1.0 / static_cast<double>(n)));
}

PhaseSet canonical_phases(std::size_t n) { return PhaseSet::canonical(n); }

ComplexMatrix phase_unitary(const PhaseSet &p, std::size_t r) {
    require_index(r, p.n());
    ComplexMatrix u(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) {
        u(j, j) = std::polar(1.0, p(r, j));
    }
    return u;
}

DensityMatrix joint_state(const DensityMatrix &rho, const DetectorGram &s,
                          const PhaseSet &p, std::size_t r) {
    const std::size_t n = rho.dim();
    require_dims(n, s.dim(), "state vs Gram");
    require_dims(n, p.n(), "state vs phases");
    require_index(r, n);

    const ComplexMatrix eta = s.vectors();
    ComplexMatrix out(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx coeff = std::polar(1.0, p(r, j) - p(r, k)) * rho(j, k);
            for (std::size_t m = 0; m < n; ++m) {
                for (std::size_t l = 0; l < n; ++l) {
                    out(j * n + m, k * n + l) =
                        coeff * eta(m, j) * std::conj(eta(l, k));
                }
            }
        }
    }
    return DensityMatrix(std::move(out));
}

ComplexMatrix trace_out_detector(const ComplexMatrix &joint, std::size_t n) {
    DUALITY_REQUIRE(joint.dim() == n * n, ErrorCode::DimMismatch,
                    "joint state must be n^2-dimensional");
    ComplexMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            cplx acc{0.0, 0.0};
            for (std::size_t m = 0; m < n; ++m) {
                acc += joint(j * n + m, k * n + m);
            }
            out(j, k) = acc;
        }
    }
    return out;
}

DensityMatrix reduced_state(const DensityMatrix &rho, const DetectorGram &s,
                            const PhaseSet &p, std::size_t r) {
    const std::size_t n = rho.dim();
    require_dims(n, s.dim(), "state vs Gram");
    require_dims(n, p.n(), "state vs phases");
    require_index(r, n);
    ComplexMatrix out(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            out(j, k) =
                std::polar(1.0, p(r, j) - p(r, k)) * rho(j, k) * s(k, j);
        }
    }
    return DensityMatrix(std::move(out));
}

double coherence_x(const DensityMatrix &rho, const DetectorGram &s) {
    const std::size_t n = rho.dim();
    require_dims(n, s.dim(), "state vs Gram");
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j != k) {
                acc += std::abs(rho(j, k) * s(k, j));
            }
        }
    }
    return acc / static_cast<double>(n);
}

double pph_upper(const DensityMatrix &rho, const DetectorGram &s) {
    return coherence_x(rho, s) + 1.0 / static_cast<double>(rho.dim());
}

} // namespace duality
