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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "duality/kernels.hpp"
#include "duality/linalg.hpp"
#include "duality/matrix.hpp"
#include "duality/rng.hpp"

using duality::CounterRng;
using duality::cplx;
namespace k = duality::kernels;

namespace {

std::vector<cplx> random_vector(std::size_t n, CounterRng &rng) {
    std::vector<cplx> v(n);
    for (cplx &z : v) {
        z = {rng.normal(), rng.normal()};
    }
    return v;
}

double scale(const std::vector<cplx> &x, const std::vector<cplx> &y) {
    double s = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::abs(x[i]) * std::abs(y[i]);
    }
    return s;
}

// Kernels must agree with the scalar table on every length, including the
// odd tails the vector loops handle separately.
struct RestoreActive {
    const k::KernelTable &saved = k::active();
    ~RestoreActive() { k::set_active(saved); }
};

} // namespace

TEST_CASE("scalar kernels match naive loops") {
    CounterRng rng(1);
    const auto &t = k::scalar_table();
    for (std::size_t n : {0U, 1U, 2U, 7U, 16U}) {
        const auto x = random_vector(n, rng);
        auto y = random_vector(n, rng);
        cplx dotc{0.0, 0.0};
        cplx dotu{0.0, 0.0};
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dotc += std::conj(x[i]) * y[i];
            dotu += x[i] * y[i];
            nrm += std::norm(x[i]);
        }
        CHECK(std::abs(t.cdotc(x.data(), y.data(), n) - dotc) <= 1e-12 * scale(x, y));
        CHECK(std::abs(t.cdotu(x.data(), y.data(), n) - dotu) <= 1e-12 * scale(x, y));
        CHECK(std::abs(t.norm_sq(x.data(), n) - nrm) <= 1e-12 * (1 + nrm));
        const cplx alpha{0.3, -1.1};
        auto expect = y;
        for (std::size_t i = 0; i < n; ++i) {
            expect[i] += alpha * x[i];
        }
        t.caxpy(alpha, x.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(y[i] - expect[i]) <= 1e-14 * (1 + std::abs(expect[i])));
        }
    }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
    const k::KernelTable *fast = k::avx2_table();
    if (fast == nullptr) {
        SKIP("AVX2 variant not available on this host");
    }
    const auto &ref = k::scalar_table();
    CounterRng rng(2);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto x = random_vector(n, rng);
        const auto y = random_vector(n, rng);
        const double tol = 1e-13 * scale(x, y);
        CHECK(std::abs(fast->cdotc(x.data(), y.data(), n) -
                       ref.cdotc(x.data(), y.data(), n)) <= tol);
        CHECK(std::abs(fast->cdotu(x.data(), y.data(), n) -
                       ref.cdotu(x.data(), y.data(), n)) <= tol);
        CHECK(std::abs(fast->norm_sq(x.data(), n) - ref.norm_sq(x.data(), n)) <=
              tol);

        const cplx alpha{-0.7, 0.25};
        auto y1 = y;
        auto y2 = y;
        ref.caxpy(alpha, x.data(), y1.data(), n);
        fast->caxpy(alpha, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(y1[i] - y2[i]) <= 1e-14 * (1 + std::abs(y1[i])));
        }

        const cplx a{0.8, 0.1}, b{-0.2, 0.5}, c{0.3, -0.4}, d{0.9, 0.0};
        auto p1 = x, q1 = y, p2 = x, q2 = y;
        ref.crot(p1.data(), q1.data(), n, a, b, c, d);
        fast->crot(p2.data(), q2.data(), n, a, b, c, d);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(p1[i] - p2[i]) <= 1e-14 * (1 + std::abs(p1[i])));
            CHECK(std::abs(q1[i] - q2[i]) <= 1e-14 * (1 + std::abs(q1[i])));
        }
    }
}

TEST_CASE("matrix layer gives the same answers on either kernel table") {
    const k::KernelTable *fast = k::avx2_table();
    if (fast == nullptr) {
        SKIP("AVX2 variant not available on this host");
    }
    RestoreActive restore;
    CounterRng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(9);
        const auto a = duality::hermitian_part(duality::ginibre(n, rng));
        const auto g = duality::ginibre(n, rng);

        k::set_active(k::scalar_table());
        const auto eig_s = duality::herm_eig(a);
        const auto prod_s = g * a;
        const auto sqrt_s = duality::psd_sqrt(duality::adjoint_times(g, g));

        k::set_active(*fast);
        const auto eig_f = duality::herm_eig(a);
        const auto prod_f = g * a;
        const auto sqrt_f = duality::psd_sqrt(duality::adjoint_times(g, g));

        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(eig_s.values[i] - eig_f.values[i]) <= 1e-11);
        }
        CHECK(duality::frobenius_distance(prod_s, prod_f) <= 1e-12);
        CHECK(duality::frobenius_distance(sqrt_s, sqrt_f) <= 1e-9);
    }
}

TEST_CASE("active table is one of the known variants") {
    const auto &t = k::active();
    const bool known = t.name == k::scalar_table().name ||
                       (k::avx2_table() != nullptr && t.name == k::avx2_table()->name);
    CHECK(known);
}
