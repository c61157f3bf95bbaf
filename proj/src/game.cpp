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

#include "duality/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "duality/duality.hpp"
#include "duality/error.hpp"
#include "duality/sampler.hpp"

namespace duality {

namespace {

struct Counters {
    std::uint64_t wins_ways = 0;
    std::uint64_t plays_ways = 0;
    std::uint64_t wins_phases = 0;
    std::uint64_t plays_phases = 0;
};

// Trials are split into contiguous blocks, one per worker; counters are
// summed in block order.
template <typename Trial>
Counters play_all(std::uint64_t trials, unsigned threads, Trial &&trial) {
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(trials, 1));
    std::vector<Counters> partial(workers);
    const std::uint64_t block = (trials + workers - 1) / workers;
    parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t w) {
        Counters c;
        const std::uint64_t begin = w * block;
        const std::uint64_t end = std::min(trials, begin + block);
        for (std::uint64_t t = begin; t < end; ++t) {
            trial(t, c);
        }
        partial[w] = c;
    });
    Counters total;
    for (const Counters &c : partial) {
        total.wins_ways += c.wins_ways;
        total.plays_ways += c.plays_ways;
        total.wins_phases += c.wins_phases;
        total.plays_phases += c.plays_phases;
    }
    return total;
}

GameStats finish(const GameConfig &cfg, const Counters &c, double p_ways,
                 double p_phases) {
    GameStats s;
    s.n = cfg.n();
    s.trials = cfg.trials;
    s.seed = cfg.seed;
    s.wins_ways = c.wins_ways;
    s.plays_ways = c.plays_ways;
    s.wins_phases = c.wins_phases;
    s.plays_phases = c.plays_phases;
    const auto trials = static_cast<double>(cfg.trials);
    s.empirical_pwin =
        static_cast<double>(c.wins_ways + c.wins_phases) / trials;
    s.p_ways = p_ways;
    s.p_phases = p_phases;
    s.analytic_pwin =
        cfg.coin_bias * p_ways + (1.0 - cfg.coin_bias) * p_phases;
    s.std_error =
        std::sqrt(s.empirical_pwin * (1.0 - s.empirical_pwin) / trials);
    return s;
}

} // namespace

void GameConfig::validate() const {
    DUALITY_REQUIRE(rho.dim() == s.dim() && rho.dim() == phases.n(),
                    ErrorCode::DimMismatch,
                    "state, Gram matrix and phases differ in n");
    DUALITY_REQUIRE(trials >= 1, ErrorCode::OutOfRange, "need trials >= 1");
    DUALITY_REQUIRE(coin_bias >= 0.0 && coin_bias <= 1.0,
                    ErrorCode::OutOfRange, "coin bias outside [0, 1]");
}

GameConfig theorem1_config(std::size_t n, std::uint64_t trials,
                           std::uint64_t seed) {
    return {maximally_coherent(n),
            DetectorGram::constant_overlap(n, optimal_overlap(n)),
            PhaseSet::canonical(n),
            trials,
            seed};
}

bool GameStats::consistent() const {
    if (trials == 0) {
        return false;
    }
    const double p = empirical_pwin;
    const double q = analytic_pwin;
    const double var = std::max(p * (1.0 - p), q * (1.0 - q));
    const double band = 4.0 * std::sqrt(var / static_cast<double>(trials));
    return std::abs(p - q) <= band;
}

GamePlan make_plan(const GameConfig &cfg) {
    cfg.validate();
    GamePlan plan;
    plan.n = cfg.n();
    plan.path_probs.resize(plan.n);
    for (std::size_t j = 0; j < plan.n; ++j) {
        plan.path_probs[j] = std::max(cfg.rho(j, j).real(), 0.0);
    }
    if (cfg.coin_bias > 0.0) {
        plan.ways = ways_strategy(cfg.rho, cfg.s, cfg.solver);
    }
    if (cfg.coin_bias < 1.0) {
        plan.phases = phases_strategy(cfg.rho, cfg.s, cfg.phases, cfg.solver);
    }
    return plan;
}

bool play_ways(const GamePlan &plan, CounterRng &rng) {
    const std::size_t j =
        sample_index(plan.path_probs, rng.uniform(), kTol.probability_renorm);
    const std::size_t b =
        sample_index(plan.ways.row(j), rng.uniform(), kTol.probability_renorm);
    return j == b;
}

bool play_phases(const GamePlan &plan, CounterRng &rng) {
    const auto r = static_cast<std::size_t>(rng.below(plan.n));
    const std::size_t g = sample_index(plan.phases.row(r), rng.uniform(),
                                       kTol.probability_renorm);
    return g == r;
}

GameStats run_combined(const GameConfig &cfg) {
    const GamePlan plan = make_plan(cfg);
    const Counters c =
        play_all(cfg.trials, cfg.threads, [&](std::uint64_t t, Counters &acc) {
            CounterRng rng(cfg.seed, t);
            if (rng.uniform() < cfg.coin_bias) {
                ++acc.plays_ways;
                acc.wins_ways += play_ways(plan, rng) ? 1 : 0;
            } else {
                ++acc.plays_phases;
                acc.wins_phases += play_phases(plan, rng) ? 1 : 0;
            }
        });
    return finish(cfg, c, cfg.coin_bias > 0.0 ? plan.ways.value : 0.0,
                  cfg.coin_bias < 1.0 ? plan.phases.value : 0.0);
}

GameStats cheat_unrestricted(const GameConfig &cfg) {
    cfg.validate();
    DUALITY_REQUIRE(cfg.rho.is_maximally_coherent(), ErrorCode::UnsupportedInput,
                    "unrestricted Bob is only modelled for the maximally "
                    "coherent input");
    const std::size_t n = cfg.n();
    // Bob intercepts the particle before the detectors, so he faces the
    // phase-encoded states U_r |psi> themselves.
    const Strategy bob = phases_strategy(
        cfg.rho, DetectorGram::identical(n), cfg.phases, cfg.solver);

    const Counters c =
        play_all(cfg.trials, cfg.threads, [&](std::uint64_t t, Counters &acc) {
            CounterRng rng(cfg.seed, t);
            const bool ways = rng.uniform() < cfg.coin_bias;
            const auto r = static_cast<std::size_t>(rng.below(n));
            const std::size_t g =
                sample_index(bob.row(r), rng.uniform(), kTol.probability_renorm);
            // Path state |g> is re-prepared: Alice's path reading is g.
            if (ways) {
                ++acc.plays_ways;
                ++acc.wins_ways; // Bob announces the path he prepared
            } else {
                ++acc.plays_phases;
                acc.wins_phases += g == r ? 1 : 0;
            }
        });
    // Canonical phases make the U_r |psi> an orthonormal Fourier basis, so
    // Bob's phase guess is exact and the numeric 1 - 1e-16 is round-off.
    const double p_phase = cfg.phases.is_canonical() ? 1.0 : bob.value;
    return finish(cfg, c, 1.0, p_phase);
}

} // namespace duality
