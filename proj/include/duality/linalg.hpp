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
 * Hermitian eigendecomposition and the matrix functions built on it.
 */

#pragma once

#include <functional>
#include <vector>

#include "duality/matrix.hpp"
#include "duality/tolerances.hpp"

namespace duality {

/// Eigenvalues sorted descending; eigenvectors are the columns of
/// `vectors`, so a = V diag(values) V†.
struct HermEig {
    std::vector<double> values;
    ComplexMatrix vectors;

    [[nodiscard]] ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi.
///
/// Throws NotHermitian when ||a - a†||_F exceeds the input tolerance and
/// NoConvergence when the sweep cap is hit before the off-diagonal mass
/// falls below `tol.jacobi_offdiag * max(1, ||a||_F)`.
HermEig herm_eig(const ComplexMatrix &a, const Tolerances &tol = kTol);

/// V f(Λ) V†.
ComplexMatrix apply_function(const HermEig &eig,
                             const std::function<double(double)> &f);

double min_eigenvalue(const ComplexMatrix &a, const Tolerances &tol = kTol);

/// Hermitian square root of a PSD matrix. Eigenvalues in
/// [-psd_floor, 0) are clamped; anything lower throws NotPsd.
ComplexMatrix psd_sqrt(const ComplexMatrix &a, const Tolerances &tol = kTol);

/// Square-root pseudo-inverse restricted to the support of a PSD matrix.
struct SupportInverseSqrt {
    ComplexMatrix inv_sqrt;
    ComplexMatrix projector; // onto the retained eigenspaces
    std::size_t rank = 0;
};
SupportInverseSqrt psd_inv_sqrt(const ComplexMatrix &a,
                                const Tolerances &tol = kTol);

/// Unitary polar factor U of a = U H. Maximizes Re tr(U† a) over
/// unitaries. Throws Singular when the smallest singular value is below
/// `tol.singular_value`; the result is polished until ||U†U - I||_F <=
/// `unitarity`.
ComplexMatrix polar_unitary(const ComplexMatrix &a, double unitarity = 1e-12,
                            const Tolerances &tol = kTol);

/// Clips negative eigenvalues to zero and rescales to unit trace.
ComplexMatrix project_to_density(const ComplexMatrix &a,
                                 const Tolerances &tol = kTol);

} // namespace duality
