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

#include "duality/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "duality/error.hpp"
#include "duality/linalg.hpp"

namespace duality {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
__extension__ typedef unsigned __int128 u128;
} // namespace

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(splitmix64_finalize(seed ^ splitmix64_finalize(stream))) {}

CounterRng::result_type CounterRng::operator()() noexcept {
    ++counter_;
    return splitmix64_finalize(key_ + counter_ * kGolden);
}

double CounterRng::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() noexcept {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection.
    for (;;) {
        const u128 m = static_cast<u128>((*this)()) * bound;
        const auto low = static_cast<std::uint64_t>(m);
        if (low >= bound || low >= (0 - bound) % bound) {
            return static_cast<std::uint64_t>(m >> 64);
        }
    }
}

std::size_t sample_index(std::span<const double> probs, double u,
                         double renorm_tol) {
    DUALITY_REQUIRE(!probs.empty(), ErrorCode::InvalidDim,
                    "empty probability table");
    double total = 0.0;
    for (double p : probs) {
        DUALITY_REQUIRE(p >= -renorm_tol, ErrorCode::OutOfRange,
                        "negative probability " + std::to_string(p));
        total += std::max(p, 0.0);
    }
    DUALITY_REQUIRE(std::abs(total - 1.0) <= renorm_tol, ErrorCode::OutOfRange,
                    "probabilities sum to " + std::to_string(total));
    const double target = u * total;
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        acc += probs[i];
        if (target < acc) {
            return i;
        }
    }
    return last_positive;
}

ComplexMatrix ginibre(std::size_t dim, CounterRng &rng) {
    ComplexMatrix g(dim);
    const double scale = std::sqrt(0.5);
    for (cplx &z : g.entries()) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = {scale * re, scale * im};
    }
    return g;
}

ComplexMatrix random_unitary(std::size_t dim, CounterRng &rng) {
    for (;;) {
        try {
            return polar_unitary(ginibre(dim, rng));
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Singular) {
                throw;
            }
        }
    }
}

} // namespace duality
