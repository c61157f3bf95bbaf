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
 * Counter-based random streams.
 *
 * A stream is identified by (seed, stream index). Its k-th draw is
 * splitmix64_finalize(key + (k + 1) * 0x9E3779B97F4A7C15), with
 * key = splitmix64_finalize(seed ^ splitmix64_finalize(stream)). Since the
 * output depends only on (seed, stream, k), work split across threads by
 * stream index reproduces bit-for-bit regardless of scheduling.
 */

#pragma once

#include <cstdint>
#include <limits>
#include <span>

#include "duality/matrix.hpp"

namespace duality {

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept;

class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Standard normal (Box-Muller, no cached second value).
    double normal() noexcept;
    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) noexcept;

    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Index drawn by inverse CDF over `probs` in index order. Probabilities
/// are renormalized when their sum is within `renorm_tol` of one; larger
/// deviations throw OutOfRange.
std::size_t sample_index(std::span<const double> probs, double u,
                         double renorm_tol);

/// Complex Ginibre matrix: iid entries (N(0,1) + i N(0,1)) / sqrt(2).
ComplexMatrix ginibre(std::size_t dim, CounterRng &rng);

/// Haar-distributed unitary (polar factor of a Ginibre draw).
ComplexMatrix random_unitary(std::size_t dim, CounterRng &rng);

} // namespace duality
