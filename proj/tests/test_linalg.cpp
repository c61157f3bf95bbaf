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

#include "duality/error.hpp"
#include "duality/linalg.hpp"
#include "duality/matrix.hpp"
#include "duality/rng.hpp"
#include "duality/tolerances.hpp"

using namespace duality;

namespace {

bool throws_code(auto &&fn, ErrorCode code) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code() == code;
    }
    return false;
}

double scaled(const ComplexMatrix &a) { return std::max(1.0, frobenius_norm(a)); }

} // namespace

TEST_CASE("matrix construction and arithmetic") {
    const ComplexMatrix a{{1.0, cplx{0.0, 2.0}}, {3.0, 4.0}};
    CHECK(a.dim() == 2);
    CHECK(a(0, 1) == cplx{0.0, 2.0});
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(a * i2 == a);
    CHECK(i2 * a == a);
    CHECK(trace(a) == cplx{5.0, 0.0});
    const ComplexMatrix ad = adjoint(a);
    CHECK(ad(1, 0) == cplx{0.0, -2.0});
    CHECK(frobenius_distance(adjoint_times(a, a), ad * a) <= 1e-14);
    CHECK(frobenius_distance(times_adjoint(a, a), a * ad) <= 1e-14);
    CHECK(std::abs(trace_product(a, ad) - trace(a * ad)) <= 1e-14);
    CHECK(hermiticity_defect(hermitian_part(a)) == 0.0);
    const ComplexMatrix kr = kron(i2, a);
    CHECK(kr.dim() == 4);
    CHECK(kr(2, 3) == a(0, 1));
    CHECK(kr(0, 2) == cplx{0.0, 0.0});
    CHECK(throws_code([&] { (void)(a * ComplexMatrix::identity(3)); },
                      ErrorCode::DimMismatch));
}

TEST_CASE("herm_eig on small closed-form cases") {
    SECTION("identity") {
        const HermEig e = herm_eig(ComplexMatrix::identity(3));
        for (double v : e.values) {
            CHECK(v == Catch::Approx(1.0).margin(1e-15));
        }
        CHECK(unitarity_defect(e.vectors) <= 1e-12);
    }
    SECTION("diagonal") {
        const std::vector<double> d{-1.0, 2.0};
        const HermEig e = herm_eig(ComplexMatrix::diagonal(d));
        CHECK(e.values[0] == Catch::Approx(2.0).margin(1e-15));
        CHECK(e.values[1] == Catch::Approx(-1.0).margin(1e-15));
    }
    SECTION("pauli x") {
        const HermEig e = herm_eig(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
        CHECK(e.values[0] == Catch::Approx(1.0).margin(1e-14));
        CHECK(e.values[1] == Catch::Approx(-1.0).margin(1e-14));
        CHECK(frobenius_distance(e.reconstruct(),
                                 ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) <= 1e-14);
    }
    SECTION("complex off-diagonal") {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
        const HermEig e =
            herm_eig(ComplexMatrix{{1.0, cplx{0.0, 1.0}}, {cplx{0.0, -1.0}, 1.0}});
        CHECK(e.values[0] == Catch::Approx(2.0).margin(1e-14));
        CHECK(e.values[1] == Catch::Approx(0.0).margin(1e-14));
    }
    SECTION("non-Hermitian input is rejected") {
        CHECK(throws_code(
            [] { (void)herm_eig(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); },
            ErrorCode::NotHermitian));
    }
}

TEST_CASE("herm_eig reconstruction on random Hermitian matrices") {
    CounterRng rng(10);
    double worst_rec = 0.0;
    double worst_unit = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng.below(8);
        ComplexMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = 2.0 * rng.uniform() - 1.0;
            for (std::size_t j = i + 1; j < n; ++j) {
                a(i, j) = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
                a(j, i) = std::conj(a(i, j));
            }
        }
        const HermEig e = herm_eig(a);
        REQUIRE(std::is_sorted(e.values.rbegin(), e.values.rend()));
        worst_rec = std::max(worst_rec,
                             frobenius_distance(e.reconstruct(), a) / scaled(a));
        worst_unit = std::max(worst_unit, unitarity_defect(e.vectors));
    }
    CHECK(worst_rec <= 1e-10);
    CHECK(worst_unit <= 1e-10);
}

TEST_CASE("herm_eig on degenerate and graded spectra") {
    // Repeated eigenvalues and entries spread over many orders of magnitude.
    CounterRng rng(11);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng.below(7);
        const ComplexMatrix u = random_unitary(n, rng);
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) {
            d[i] = (t % 2 == 0) ? static_cast<double>(i % 2)
                                : std::ldexp(1.0, -4 * static_cast<int>(i));
        }
        const ComplexMatrix a =
            hermitian_part(u * ComplexMatrix::diagonal(d) * adjoint(u));
        const HermEig e = herm_eig(a);
        CHECK(frobenius_distance(e.reconstruct(), a) <= 1e-10 * scaled(a));
        std::sort(d.rbegin(), d.rend());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(e.values[i] - d[i]) <= 1e-12);
        }
    }
}

TEST_CASE("psd_sqrt") {
    SECTION("identity and diagonal") {
        CHECK(frobenius_distance(psd_sqrt(ComplexMatrix::identity(4)),
                                 ComplexMatrix::identity(4)) <= 1e-14);
        const std::vector<double> d{4.0, 9.0};
        const std::vector<double> r{2.0, 3.0};
        CHECK(frobenius_distance(psd_sqrt(ComplexMatrix::diagonal(d)),
                                 ComplexMatrix::diagonal(r)) <= 1e-14);
    }
    SECTION("two-state Gram matrix") {
        const ComplexMatrix w = ComplexMatrix{{1.0, 0.5}, {0.5, 1.0}} * cplx{0.5};
        const ComplexMatrix r = psd_sqrt(w);
        CHECK(frobenius_distance(r * r, w) <= 1e-10);
        CHECK(hermiticity_defect(r) <= 1e-15);
    }
    SECTION("round-off negatives are clamped, real negatives rejected") {
        const std::vector<double> tiny{1.0, -1e-12};
        CHECK_NOTHROW(psd_sqrt(ComplexMatrix::diagonal(tiny)));
        const std::vector<double> neg{1.0, -1e-6};
        CHECK(throws_code([&] { (void)psd_sqrt(ComplexMatrix::diagonal(neg)); },
                          ErrorCode::NotPsd));
    }
    SECTION("random Wishart matrices") {
        CounterRng rng(12);
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const std::size_t n = 1 + rng.below(8);
            const ComplexMatrix g = ginibre(n, rng);
            const ComplexMatrix a = hermitian_part(adjoint_times(g, g));
            const ComplexMatrix r = psd_sqrt(a);
            worst = std::max(worst, frobenius_distance(r * r, a) / scaled(a));
            REQUIRE(min_eigenvalue(r) >= -1e-10);
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("psd_inv_sqrt on a rank-deficient matrix") {
    const std::vector<double> d{4.0, 0.0, 1.0};
    const SupportInverseSqrt s = psd_inv_sqrt(ComplexMatrix::diagonal(d));
    CHECK(s.rank == 2);
    CHECK(s.inv_sqrt(0, 0).real() == Catch::Approx(0.5));
    CHECK(std::abs(s.inv_sqrt(1, 1)) <= 1e-15);
    CHECK(s.projector(1, 1).real() == Catch::Approx(0.0).margin(1e-15));
    CHECK(s.projector(2, 2).real() == Catch::Approx(1.0));
}

TEST_CASE("polar_unitary") {
    SECTION("unitary input is a fixed point") {
        CounterRng rng(13);
        const ComplexMatrix u = random_unitary(5, rng);
        CHECK(frobenius_distance(polar_unitary(u), u) <= 1e-12);
    }
    SECTION("positive diagonal maps to the identity") {
        const std::vector<double> d{3.0, 5.0};
        CHECK(frobenius_distance(polar_unitary(ComplexMatrix::diagonal(d)),
                                 ComplexMatrix::identity(2)) <= 1e-14);
    }
    SECTION("column-normalized permutation") {
        const ComplexMatrix a{{0.0, 2.0}, {1.0, 0.0}};
        const ComplexMatrix u = polar_unitary(a);
        CHECK(frobenius_distance(u, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) <= 1e-14);
        CHECK(min_eigenvalue(hermitian_part(adjoint_times(u, a))) >= 0.0);
    }
    SECTION("maximizes Re tr(U† a)") {
        CounterRng rng(14);
        for (int t = 0; t < 50; ++t) {
            const ComplexMatrix a = ginibre(4, rng);
            const ComplexMatrix u = polar_unitary(a);
            CHECK(unitarity_defect(u) <= 1e-10);
            const double best = trace(adjoint_times(u, a)).real();
            for (int k = 0; k < 20; ++k) {
                const ComplexMatrix v = random_unitary(4, rng);
                CHECK(trace(adjoint_times(v, a)).real() <= best + 1e-12);
            }
        }
    }
    SECTION("singular input is rejected") {
        CHECK(throws_code(
            [] { (void)polar_unitary(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}); },
            ErrorCode::Singular));
    }
}

TEST_CASE("project_to_density clips and renormalizes") {
    const std::vector<double> d{0.7, 0.5, -0.2};
    const ComplexMatrix p = project_to_density(ComplexMatrix::diagonal(d));
    CHECK(trace(p).real() == Catch::Approx(1.0));
    CHECK(min_eigenvalue(p) >= 0.0);
    CHECK(p(0, 0).real() == Catch::Approx(0.7 / 1.2));
}

TEST_CASE("counter RNG streams") {
    CounterRng a(42, 7);
    CounterRng b(42, 7);
    CounterRng c(42, 8);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        differs = differs || x != c();
    }
    CHECK(differs);

    CounterRng u(1);
    double sum = 0.0;
    double sq = 0.0;
    constexpr int kN = 200000;
    for (int i = 0; i < kN; ++i) {
        const double v = u.normal();
        sum += v;
        sq += v * v;
    }
    CHECK(std::abs(sum / kN) <= 0.01);
    CHECK(std::abs(sq / kN - 1.0) <= 0.02);

    CounterRng r(5);
    std::vector<int> hist(6, 0);
    for (int i = 0; i < 60000; ++i) {
        ++hist[r.below(6)];
    }
    for (int h : hist) {
        CHECK(std::abs(h - 10000) <= 500);
    }
}

TEST_CASE("sample_index uses the inverse CDF in index order") {
    const std::vector<double> p{0.25, 0.0, 0.75};
    CHECK(sample_index(p, 0.0, 1e-9) == 0);
    CHECK(sample_index(p, 0.2499, 1e-9) == 0);
    CHECK(sample_index(p, 0.25, 1e-9) == 2);
    CHECK(sample_index(p, 0.999999, 1e-9) == 2);
    const std::vector<double> off{0.5, 0.5 + 5e-10};
    CHECK_NOTHROW(sample_index(off, 0.5, 1e-9));
    const std::vector<double> bad{0.5, 0.6};
    CHECK(throws_code([&] { (void)sample_index(bad, 0.5, 1e-9); },
                      ErrorCode::OutOfRange));
}
