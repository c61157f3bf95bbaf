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

#include "duality/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "duality/error.hpp"
#include "duality/kernels.hpp"

namespace duality {

namespace {

double scale_of(const ComplexMatrix &a) {
    return std::max(1.0, frobenius_norm(a));
}

double offdiag_norm(const ComplexMatrix &a) {
    double acc = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                acc += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(acc);
}

// Annihilates a(p,q) with J = diag(1, e^{-i theta}) R(phi), where
// a(p,q) = |b| e^{i theta} and R is the real Jacobi rotation of the
// phase-stripped block. Rows p and q of `a` become rows of J† a; the
// columns are then restored from Hermiticity, so only contiguous rows are
// ever combined. `vt` holds the eigenvectors as rows.
void rotate(ComplexMatrix &a, ComplexMatrix &vt, std::size_t p,
            std::size_t q) {
    const cplx b = a(p, q);
    const double mag = std::abs(b);
    const cplx phase = b / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const auto &k = kernels::active();
    const std::size_t n = a.dim();
    k.crot(a.row(p).data(), a.row(q).data(), n, c, -s * phase, s, c * phase);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != p && i != q) {
            a(i, p) = std::conj(a(p, i));
            a(i, q) = std::conj(a(q, i));
        }
    }
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const cplx phase_conj = std::conj(phase);
    k.crot(vt.row(p).data(), vt.row(q).data(), n, c, -s * phase_conj, s,
           c * phase_conj);
}

} // namespace

ComplexMatrix HermEig::reconstruct() const {
    return apply_function(*this, [](double v) { return v; });
}

HermEig herm_eig(const ComplexMatrix &input, const Tolerances &tol) {
    DUALITY_REQUIRE(!input.empty(), ErrorCode::InvalidDim,
                    "empty matrix");
    DUALITY_REQUIRE(input.all_finite(), ErrorCode::InvalidState,
                    "non-finite matrix entries");
    const double scale = scale_of(input);
    const double defect = hermiticity_defect(input);
    DUALITY_REQUIRE(defect <= tol.hermitian_input * scale,
                    ErrorCode::NotHermitian,
                    "||a - a^H||_F = " + std::to_string(defect));

    const std::size_t n = input.dim();
    ComplexMatrix a = hermitian_part(input);
    ComplexMatrix vt = ComplexMatrix::identity(n);
    const double threshold = tol.jacobi_offdiag * scale;

    bool converged = false;
    for (int sweep = 0; sweep <= tol.jacobi_max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= threshold) {
            converged = true;
            break;
        }
        if (sweep == tol.jacobi_max_sweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q) != cplx{0.0, 0.0}) {
                    rotate(a, vt, p, q);
                }
            }
        }
    }
    DUALITY_REQUIRE(converged, ErrorCode::NoConvergence,
                    "Jacobi exceeded " +
                        std::to_string(tol.jacobi_max_sweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) {
                         return a(l, l).real() > a(r, r).real();
                     });

    HermEig out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a(src, src).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, col) = vt(src, i);
        }
    }
    return out;
}

ComplexMatrix apply_function(const HermEig &eig,
                             const std::function<double(double)> &f) {
    const std::size_t n = eig.vectors.dim();
    ComplexMatrix scaled = eig.vectors;
    for (std::size_t col = 0; col < n; ++col) {
        const double fv = f(eig.values[col]);
        for (std::size_t i = 0; i < n; ++i) {
            scaled(i, col) *= fv;
        }
    }
    return hermitian_part(times_adjoint(scaled, eig.vectors));
}

double min_eigenvalue(const ComplexMatrix &a, const Tolerances &tol) {
    return herm_eig(a, tol).values.back();
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a, const Tolerances &tol) {
    const HermEig eig = herm_eig(a, tol);
    const double floor = -tol.psd_floor * scale_of(a);
    DUALITY_REQUIRE(eig.values.back() >= floor, ErrorCode::NotPsd,
                    "smallest eigenvalue " +
                        std::to_string(eig.values.back()));
    return apply_function(eig,
                          [](double v) { return std::sqrt(std::max(v, 0.0)); });
}

SupportInverseSqrt psd_inv_sqrt(const ComplexMatrix &a,
                                const Tolerances &tol) {
    const HermEig eig = herm_eig(a, tol);
    DUALITY_REQUIRE(eig.values.back() >= -tol.psd_floor * scale_of(a),
                    ErrorCode::NotPsd,
                    "smallest eigenvalue " +
                        std::to_string(eig.values.back()));
    const double cut = tol.support * std::max(eig.values.front(), 0.0);
    SupportInverseSqrt out;
    for (double v : eig.values) {
        if (v > cut && v > 0.0) {
            ++out.rank;
        }
    }
    out.inv_sqrt = apply_function(eig, [cut](double v) {
        return (v > cut && v > 0.0) ? 1.0 / std::sqrt(v) : 0.0;
    });
    out.projector = apply_function(
        eig, [cut](double v) { return (v > cut && v > 0.0) ? 1.0 : 0.0; });
    return out;
}

ComplexMatrix polar_unitary(const ComplexMatrix &a, double unitarity,
                            const Tolerances &tol) {
    const HermEig gram = herm_eig(hermitian_part(adjoint_times(a, a)), tol);
    const double sigma_min = std::sqrt(std::max(gram.values.back(), 0.0));
    DUALITY_REQUIRE(sigma_min > tol.singular_value, ErrorCode::Singular,
                    "smallest singular value " + std::to_string(sigma_min));
    ComplexMatrix u =
        a * apply_function(gram, [](double v) { return 1.0 / std::sqrt(v); });

    // Newton-Schulz: U <- U (3I - U†U) / 2, quadratically convergent here.
    // One step is always taken so the factor is unitary to round-off.
    const std::size_t n = a.dim();
    const ComplexMatrix three = ComplexMatrix::identity(n) * cplx{3.0};
    for (int iter = 0; iter < 8 && (iter == 0 || unitarity_defect(u) > unitarity);
         ++iter) {
        u = u * ((three - adjoint_times(u, u)) * cplx{0.5});
    }
    DUALITY_REQUIRE(unitarity_defect(u) <= unitarity, ErrorCode::NoConvergence,
                    "polar factor not unitary to " +
                        std::to_string(unitarity));
    return u;
}

ComplexMatrix project_to_density(const ComplexMatrix &a,
                                 const Tolerances &tol) {
    const HermEig eig = herm_eig(hermitian_part(a), tol);
    double total = 0.0;
    for (double v : eig.values) {
        total += std::max(v, 0.0);
    }
    DUALITY_REQUIRE(total > 0.0, ErrorCode::InvalidState,
                    "no positive spectrum to project onto");
    return apply_function(
        eig, [total](double v) { return std::max(v, 0.0) / total; });
}

} // namespace duality
