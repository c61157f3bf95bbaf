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
 * Random physical configurations and the soundness sweep over them.
 *
 * Configuration i of (n, seed) uses stream CounterRng(seed, i):
 *  - rho: G†G / tr for a k x n Ginibre block G with k uniform in 1..n,
 *    mixed with the maximally coherent state at a uniform weight;
 *  - S: a Wishart draw of rank n (probability 3/4) or of uniform rank
 *    1..n-1, rescaled to unit diagonal and mixed with the all-ones matrix
 *    at a uniform weight;
 *  - canonical phases.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "duality/discrimination.hpp"
#include "duality/duality.hpp"
#include "duality/interferometer.hpp"

namespace duality {

struct PhysicalConfig {
    DensityMatrix rho;
    DetectorGram s;
    PhaseSet phases;
};

PhysicalConfig sample_config(std::size_t n, std::uint64_t seed,
                             std::uint64_t index);

/// Optimal value of a discrimination problem together with its proof.
/// `upper` = value + d * residual is a rigorous upper bound on the optimum:
/// Gamma_s + residual * I is feasible for the dual problem.
struct CertifiedValue {
    double value = 0.0;
    double upper = 0.0;
    double residual = 0.0;
    bool certified = false;
    std::string method;
};

/// Bob's optimal ways probability. Tries, in order until certified: one
/// polished Gram ascent from the square-root measurement, the full
/// restart schedule, then the fixed-point solver (always used for
/// singular W).
CertifiedValue ways_value(const DensityMatrix &rho, const DetectorGram &s,
                          double certificate_tol = 1e-8);

/// Alice's phases probability from the Fourier measurement when it applies,
/// else from the fixed-point solver.
CertifiedValue phases_value(const DensityMatrix &rho, const DetectorGram &s,
                            const PhaseSet &p,
                            const FixedPointOptions &opts = {});

struct ConfigEvaluation {
    double x_coh = 0.0;
    double pd = 0.0;
    double pph = 0.0;
    double lhs = 0.0;
    double lhs_upper = 0.0; // at the dual upper bound on P_d
    DualityPoint coherence_point;
    DualityPoint operational_point;
    double region_excess = 0.0; // of the operational point
    bool pd_certified = false;
};

ConfigEvaluation evaluate_config(const PhysicalConfig &cfg,
                                 const FixedPointOptions &phase_opts = {});

struct SweepOptions {
    std::size_t n = 2;
    std::size_t count = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double lhs_offset = 0.0; // harness self-test hook, added to every LHS
    FixedPointOptions phase_opts{200, 1e-9, 10};
};

struct SweepResult {
    std::size_t count = 0;
    double max_lhs = -std::numeric_limits<double>::infinity();
    std::uint64_t worst_lhs_index = 0;
    double max_lhs_upper = -std::numeric_limits<double>::infinity();
    double max_region_excess = -std::numeric_limits<double>::infinity();
    std::uint64_t worst_region_index = 0;
    // operational x minus coherence x
    double max_x_gap = -std::numeric_limits<double>::infinity();
    std::size_t uncertified = 0;
};

SweepResult soundness_sweep(const SweepOptions &opts);

/// Runs body(i) for i in [0, count) on `threads` workers with a static
/// interleaved schedule. The first exception is rethrown after joining.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &body);

} // namespace duality
