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

// Compiled with -mavx2 -mfma. Nothing in here may run before the dispatcher
// has confirmed CPU support.

#include <immintrin.h>

#include "duality/kernels.hpp"

namespace duality::kernels {
namespace {

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

struct Broadcast {
    __m256d re;
    __m256d im;
    explicit Broadcast(cplx a)
        : re(_mm256_set1_pd(a.real())), im(_mm256_set1_pd(a.imag())) {}
};

// a * x for a broadcast complex a.
inline __m256d cmul(const Broadcast &a, __m256d x) {
    const __m256d swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmaddsub_pd(a.re, x, _mm256_mul_pd(a.im, swapped));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// v0 - v1 + v2 - v3
inline double halt(__m256d v) {
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    return hsum(_mm256_mul_pd(v, sign));
}

inline const double *dp(const cplx *p) {
    return reinterpret_cast<const double *>(p);
}
inline double *dp(cplx *p) { return reinterpret_cast<double *>(p); }

void caxpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const Broadcast a(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        const __m256d yv = _mm256_loadu_pd(dp(y + i));
        _mm256_storeu_pd(dp(y + i), _mm256_add_pd(yv, cmul(a, xv)));
    }
    for (; i < n; ++i) {
        y[i] = {y[i].real() + (alpha.real() * x[i].real() -
                               alpha.imag() * x[i].imag()),
                y[i].imag() + (alpha.real() * x[i].imag() +
                               alpha.imag() * x[i].real())};
    }
}

void dot_accumulate(const cplx *x, const cplx *y, std::size_t n,
                    __m256d &direct, __m256d &crossed, std::size_t &i) {
    direct = _mm256_setzero_pd();
    crossed = _mm256_setzero_pd();
    for (i = 0; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        const __m256d yv = _mm256_loadu_pd(dp(y + i));
        direct = _mm256_fmadd_pd(xv, yv, direct);
        crossed =
            _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), crossed);
    }
}

cplx cdotc_avx2(const cplx *x, const cplx *y, std::size_t n) {
    __m256d direct;
    __m256d crossed;
    std::size_t i;
    dot_accumulate(x, y, n, direct, crossed, i);
    double re = hsum(direct);
    double im = halt(crossed);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

cplx cdotu_avx2(const cplx *x, const cplx *y, std::size_t n) {
    __m256d direct;
    __m256d crossed;
    std::size_t i;
    dot_accumulate(x, y, n, direct, crossed, i);
    double re = halt(direct);
    double im = hsum(crossed);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
    }
    return {re, im};
}

double norm_sq_avx2(const cplx *x, std::size_t n) {
    const double *d = dp(x);
    const std::size_t len = 2 * n;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256d a = _mm256_loadu_pd(d + i);
        const __m256d b = _mm256_loadu_pd(d + i + 4);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
        acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i + 4 <= len; i += 4) {
        const __m256d a = _mm256_loadu_pd(d + i);
        acc0 = _mm256_fmadd_pd(a, a, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < len; ++i) {
        acc += d[i] * d[i];
    }
    return acc;
}

void crot_avx2(cplx *x, cplx *y, std::size_t n, cplx a, cplx b, cplx c,
               cplx d) {
    const Broadcast av(a), bv(b), cv(c), dv(d);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(dp(x + i));
        const __m256d yv = _mm256_loadu_pd(dp(y + i));
        _mm256_storeu_pd(dp(x + i),
                         _mm256_add_pd(cmul(av, xv), cmul(bv, yv)));
        _mm256_storeu_pd(dp(y + i),
                         _mm256_add_pd(cmul(cv, xv), cmul(dv, yv)));
    }
    for (; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = {a.real() * xi.real() - a.imag() * xi.imag() +
                    b.real() * yi.real() - b.imag() * yi.imag(),
                a.real() * xi.imag() + a.imag() * xi.real() +
                    b.real() * yi.imag() + b.imag() * yi.real()};
        y[i] = {c.real() * xi.real() - c.imag() * xi.imag() +
                    d.real() * yi.real() - d.imag() * yi.imag(),
                c.real() * xi.imag() + c.imag() * xi.real() +
                    d.real() * yi.imag() + d.imag() * yi.real()};
    }
}

} // namespace

const KernelTable &avx2_table_unchecked() {
    static const KernelTable table{"avx2",      caxpy_avx2,   cdotc_avx2,
                                   cdotu_avx2,  norm_sq_avx2, crot_avx2};
    return table;
}

} // namespace duality::kernels
