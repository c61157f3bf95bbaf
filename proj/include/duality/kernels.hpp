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
 * Data-parallel complex vector kernels used by the dense matrix layer.
 *
 * Every kernel exists as a portable scalar reference and, on x86-64 hosts
 * with AVX2+FMA, as a vectorized variant. The variant is picked once at
 * startup (CPUID) and can be forced with the environment variable
 * `DUALITY_KERNELS=scalar|avx2`. All variants operate on interleaved
 * `std::complex<double>` storage and agree to within a few ulps; they are
 * not bit-identical since the AVX2 path fuses multiply-adds and reorders
 * reductions.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace duality::kernels {

using cplx = std::complex<double>;

struct KernelTable {
    std::string_view name;
    /// y += alpha * x
    void (*caxpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    /// sum conj(x_i) * y_i
    cplx (*cdotc)(const cplx *x, const cplx *y, std::size_t n);
    /// sum x_i * y_i
    cplx (*cdotu)(const cplx *x, const cplx *y, std::size_t n);
    /// sum |x_i|^2
    double (*norm_sq)(const cplx *x, std::size_t n);
    /// (x, y) <- (a x + b y, c x + d y), elementwise
    void (*crot)(cplx *x, cplx *y, std::size_t n, cplx a, cplx b, cplx c,
                 cplx d);
};

const KernelTable &scalar_table();

/// Returns nullptr when the AVX2 variant is not compiled in or the CPU
/// lacks AVX2/FMA.
const KernelTable *avx2_table();

/// Table used by the matrix layer.
const KernelTable &active();

/// Overrides the active table (tests, benchmarking). Not meant to be
/// toggled while other threads are computing.
void set_active(const KernelTable &table);

// Span conveniences over the active table.

inline void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    active().caxpy(alpha, x.data(), y.data(), x.size());
}
inline cplx cdotc(std::span<const cplx> x, std::span<const cplx> y) {
    return active().cdotc(x.data(), y.data(), x.size());
}
inline cplx cdotu(std::span<const cplx> x, std::span<const cplx> y) {
    return active().cdotu(x.data(), y.data(), x.size());
}
inline double norm_sq(std::span<const cplx> x) {
    return active().norm_sq(x.data(), x.size());
}
inline void crot(std::span<cplx> x, std::span<cplx> y, cplx a, cplx b,
                 cplx c, cplx d) {
    active().crot(x.data(), y.data(), x.size(), a, b, c, d);
}

} // namespace duality::kernels
