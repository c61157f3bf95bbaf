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

// duality: command-line front end.
//
// Exit codes: 0 success, 1 verify failures, 2 usage/parse/I-O errors,
// 3 bound violation, 4 statistically inconsistent game run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "duality/duality.hpp"
#include "duality/error.hpp"
#include "duality/game.hpp"
#include "duality/interferometer.hpp"
#include "duality/sampler.hpp"
#include "duality/serialize.hpp"
#include "duality/verify.hpp"
#include "json.hpp"

namespace {

using namespace duality;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kBoundViolation = 3;
constexpr int kInconsistent = 4;

constexpr double kBoundTol = 1e-8;
constexpr std::size_t kMaxSampledN = 64;

struct Common {
    std::size_t n = 2;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "csv";
};

void emit(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text << std::flush;
        DUALITY_REQUIRE(std::cout.good(), ErrorCode::Io, "stdout write failed");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    DUALITY_REQUIRE(f.good(), ErrorCode::Io, "cannot open " + path);
    f << text;
    f.close();
    DUALITY_REQUIRE(!f.fail(), ErrorCode::Io, "write to " + path + " failed");
}

int cmd_region(const Common &c, std::size_t samples, unsigned threads) {
    DUALITY_REQUIRE(samples == 0 || c.n <= kMaxSampledN, ErrorCode::OutOfRange,
                    "random samples need n <= " + std::to_string(kMaxSampledN));
    std::vector<RegionRow> rows = boundary_rows(c.n);
    std::vector<ConfigEvaluation> evals(samples);
    parallel_for(samples, threads, [&](std::size_t i) {
        evals[i] = evaluate_config(sample_config(c.n, c.seed, i));
    });
    std::size_t violations = 0;
    for (const ConfigEvaluation &ev : evals) {
        RegionRow row = make_row(ev.operational_point, std::nullopt);
        row.lemma1_lhs = ev.lhs;
        rows.push_back(row);
        if (!region_membership(ev.operational_point).member) {
            ++violations;
        }
    }
    std::ostringstream csv;
    write_region_csv(csv, rows);
    emit(c.out, csv.str());
    if (violations > 0) {
        std::cerr << "duality region: " << violations
                  << " sampled point(s) outside the physical region\n";
        return kBoundViolation;
    }
    return kOk;
}

int cmd_bound_check(const Common &c, std::size_t count, unsigned threads,
                    double lhs_offset) {
    DUALITY_REQUIRE(count >= 1, ErrorCode::OutOfRange, "need --samples >= 1");
    DUALITY_REQUIRE(c.n <= kMaxSampledN, ErrorCode::OutOfRange,
                    "bound-check needs n <= " + std::to_string(kMaxSampledN));
    SweepOptions o;
    o.n = c.n;
    o.count = count;
    o.seed = c.seed;
    o.threads = threads;
    o.lhs_offset = lhs_offset;
    const SweepResult r = soundness_sweep(o);
    const bool ok = r.max_lhs_upper <= kBoundTol &&
                    r.max_region_excess <= kBoundTol;

    std::ostringstream text;
    if (c.format == "json") {
        nlohmann::json j = {{"n", c.n},
                            {"count", r.count},
                            {"seed", c.seed},
                            {"max_lemma1_lhs", r.max_lhs},
                            {"max_lemma1_lhs_upper", r.max_lhs_upper},
                            {"max_region_excess", r.max_region_excess},
                            {"uncertified", r.uncertified},
                            {"pass", ok}};
        text << j.dump(2) << '\n';
    } else {
        text << "n,count,seed,max_lemma1_lhs,max_lemma1_lhs_upper,"
                "max_region_excess,uncertified,pass\n"
             << c.n << ',' << r.count << ',' << c.seed << ','
             << format_double(r.max_lhs) << ','
             << format_double(r.max_lhs_upper) << ','
             << format_double(r.max_region_excess) << ',' << r.uncertified
             << ',' << (ok ? "true" : "false") << '\n';
    }
    emit(c.out, text.str());
    if (!ok) {
        const std::uint64_t idx = r.max_lhs_upper > kBoundTol
                                      ? r.worst_lhs_index
                                      : r.worst_region_index;
        const PhysicalConfig bad = sample_config(c.n, c.seed, idx);
        std::cerr << "duality bound-check: violation at configuration " << idx
                  << " (seed " << c.seed << ")\n"
                  << physical_config_json(bad.rho, bad.s, bad.phases);
        return kBoundViolation;
    }
    return kOk;
}

int cmd_symmetric(const Common &c, std::size_t grid) {
    DUALITY_REQUIRE(grid >= 2, ErrorCode::OutOfRange, "need --grid >= 2");
    const std::size_t n = c.n;
    const double inv = 1.0 / static_cast<double>(n);
    std::vector<double> overlaps;
    const double s_opt = optimal_overlap(n);
    for (std::size_t k = 0; k < grid; ++k) {
        overlaps.push_back(static_cast<double>(k) /
                           static_cast<double>(grid - 1));
    }
    overlaps.push_back(s_opt);
    std::sort(overlaps.begin(), overlaps.end());
    overlaps.erase(std::unique(overlaps.begin(), overlaps.end()),
                   overlaps.end());

    bool ok = true;
    nlohmann::json list = nlohmann::json::array();
    std::ostringstream csv;
    csv << "s,X,P_d,x,y,lemma1_lhs,ellipse_form,p_win\n";
    for (double s : overlaps) {
        const double x_coh = (1.0 - inv) * s;
        const double pd = symmetric_pd(n, s);
        const DualityPoint p = symmetric_family_point(n, s);
        const double lhs = lemma1_lhs(x_coh, pd, n);
        const double form = ellipse_form(p.x, p.y, n);
        // The Fourier measurement reaches X + 1/n on this family.
        const double p_win = 0.5 * (x_coh + inv + pd);
        ok = ok && std::abs(lhs) <= kBoundTol &&
             std::abs(form - 1.0) <= kBoundTol;
        if (s == s_opt) {
            ok = ok && std::abs(p_win - theorem1_bound(n)) <= kBoundTol;
        }
        csv << format_double(s) << ',' << format_double(x_coh) << ','
            << format_double(pd) << ',' << format_double(p.x) << ','
            << format_double(p.y) << ',' << format_double(lhs) << ','
            << format_double(form) << ',' << format_double(p_win) << '\n';
        list.push_back({{"s", s},
                        {"X", x_coh},
                        {"P_d", pd},
                        {"x", p.x},
                        {"y", p.y},
                        {"lemma1_lhs", lhs},
                        {"ellipse_form", form},
                        {"p_win", p_win}});
    }
    if (c.format == "json") {
        nlohmann::json j = {{"n", n}, {"rows", list}};
        emit(c.out, j.dump(2) + "\n");
    } else {
        emit(c.out, csv.str());
    }
    if (!ok) {
        std::cerr << "duality symmetric: residual above " << kBoundTol << '\n';
        return kBoundViolation;
    }
    return kOk;
}

struct GameFlags {
    std::string config;
    std::optional<std::uint64_t> trials;
    std::optional<double> overlap;
    std::optional<unsigned> threads;
    bool cheat = false;
};

int cmd_game(const Common &c, bool n_given, bool seed_given,
             const GameFlags &g) {
    GameConfig cfg = g.config.empty() ? theorem1_config(c.n, 100000, c.seed)
                                      : load_game_config(g.config);
    if (!g.config.empty() && n_given && c.n != cfg.n()) {
        throw Error(ErrorCode::DimMismatch,
                    "--n disagrees with the configuration file");
    }
    if (seed_given || g.config.empty()) {
        cfg.seed = c.seed;
    }
    if (g.trials) {
        cfg.trials = *g.trials;
    }
    if (g.overlap) {
        cfg.s = DetectorGram::constant_overlap(cfg.n(), *g.overlap);
    }
    if (g.threads) {
        cfg.threads = *g.threads;
    }
    cfg.validate();
    const GameStats stats = g.cheat ? cheat_unrestricted(cfg) : run_combined(cfg);
    if (c.format == "json") {
        emit(c.out, game_stats_json(stats));
    } else {
        emit(c.out, format_game_stats(stats));
    }
    if (!stats.consistent()) {
        std::cerr << "duality game: empirical rate outside the 4-sigma band\n";
        return kInconsistent;
    }
    return kOk;
}

int cmd_verify(const Common &c, const std::vector<std::string> &suites) {
    const VerifyReport report = run_verify(c.seed, suites);
    emit(c.out, report.to_json());
    if (!report.all_passed()) {
        for (const CheckResult &r : report.checks) {
            if (!r.passed) {
                std::cerr << "FAIL " << r.suite << '/' << r.name << ": "
                          << r.detail << '\n';
            }
        }
        return kVerifyFailed;
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Wave-particle duality games for n-path interferometers"};
    app.require_subcommand(1);

    Common common;
    std::size_t samples = 0;
    std::size_t count = 10000;
    std::size_t grid = 101;
    unsigned threads = 1;
    double lhs_offset = 0.0;
    GameFlags game;
    std::vector<std::string> suites;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--n", common.n, "number of paths")
            ->check(CLI::Range(static_cast<std::size_t>(2),
                               static_cast<std::size_t>(100000000)));
        sub->add_option("--seed", common.seed, "random seed")
            ->envname("DUALITY_SEED");
        sub->add_option("--out", common.out, "output file ('-' = stdout)");
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App *region = app.add_subcommand("region", "boundary traces and samples");
    add_common(region);
    region->add_option("--samples", samples, "random physical points");
    region->add_option("--threads", threads, "worker threads");

    CLI::App *bound = app.add_subcommand("bound-check", "coherence bound soundness sweep");
    add_common(bound);
    bound->add_option("--samples,--count", count, "random configurations");
    bound->add_option("--threads", threads, "worker threads");
    bound->add_option("--lhs-offset", lhs_offset)->group("");

    CLI::App *symmetric =
        app.add_subcommand("symmetric", "constant-overlap family sweep");
    add_common(symmetric);
    symmetric->add_option("--grid", grid, "number of overlap values");

    CLI::App *game_cmd = app.add_subcommand("game", "Monte Carlo game");
    add_common(game_cmd);
    game_cmd->add_option("--config", game.config, "JSON configuration file");
    game_cmd->add_option("--trials", game.trials, "number of rounds");
    game_cmd->add_option("--overlap", game.overlap, "constant detector overlap");
    game_cmd->add_option("--threads", game.threads, "worker threads");
    game_cmd->add_flag("--cheat", game.cheat, "unrestricted Bob");

    CLI::App *verify = app.add_subcommand("verify", "built-in invariant suites");
    add_common(verify);
    verify->add_option("--suite", suites, "restrict to the named suite(s)")
        ->check(CLI::IsMember(verify_suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (region->parsed()) {
            return cmd_region(common, samples, threads);
        }
        if (bound->parsed()) {
            return cmd_bound_check(common, count, threads, lhs_offset);
        }
        if (symmetric->parsed()) {
            return cmd_symmetric(common, grid);
        }
        if (game_cmd->parsed()) {
            return cmd_game(common, game_cmd->count("--n") > 0,
                            game_cmd->count("--seed") > 0 ||
                                std::getenv("DUALITY_SEED") != nullptr,
                            game);
        }
        if (verify->parsed()) {
            return cmd_verify(common, suites);
        }
    } catch (const Error &e) {
        std::cerr << "duality: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "duality: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
