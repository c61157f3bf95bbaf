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

#pragma once

namespace duality {

/// Every numerical threshold in the library. Matrix-valued checks are
/// hybrid: the constant is multiplied by max(1, ||A||_F).
struct Tolerances {
    double hermitian_input = 1e-9;  // herm_eig precondition
    double jacobi_offdiag = 1e-12;  // cyclic Jacobi stopping criterion
    int jacobi_max_sweeps = 100;
    double psd_floor = 1e-10;       // eigenvalues in [-floor, 0) clamp to 0
    double singular_value = 1e-12;  // polar factor precondition
    double gram_singular = 1e-10;   // Gram ascent refuses smaller eigenvalues
    double support = 1e-12;         // pseudo-inverse cut, relative to lambda_max
    double state_hermitian = 1e-10; // DensityMatrix invariants
    double state_trace = 1e-10;
    double gram_diagonal = 1e-12;   // DetectorGram unit diagonal
    double prior_sum = 1e-12;
    double povm_sum = 1e-9;
    double probability_renorm = 1e-9; // sampling tables
    double region = 1e-9;             // region membership slack
    double coordinate = 1e-12;        // slack on [0,1] coordinate ranges
};

inline constexpr Tolerances kTol{};

} // namespace duality
