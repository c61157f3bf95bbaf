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
#include <cctype>
#include <cstring>
#include <limits>
#include <sstream>

#include "duality/error.hpp"
#include "duality/linalg.hpp"
#include "duality/rng.hpp"
#include "duality/serialize.hpp"

using namespace duality;

namespace {

template <class F> bool throws_code(F &&fn, ErrorCode code) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("double formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(-2.5e-20) == "-2.5e-20");
    CHECK(throws_code([] { (void)format_double(std::nan("")); }, ErrorCode::OutOfRange));

    CounterRng rng(50);
    for (int i = 0; i < 20000; ++i) {
        // Random bit patterns cover subnormals and every exponent.
        double v;
        const std::uint64_t bits = rng();
        std::memcpy(&v, &bits, sizeof v);
        if (!std::isfinite(v)) {
            continue;
        }
        const std::string s = format_double(v);
        REQUIRE(parse_double(s) == v);
        const std::string mantissa = s.substr(0, s.find('e'));
        const auto first = mantissa.find_first_of("123456789");
        const auto last = mantissa.find_last_of("123456789");
        std::size_t digits = 0;
        if (first != std::string::npos) {
            for (std::size_t i = first; i <= last; ++i) {
                digits += std::isdigit(static_cast<unsigned char>(mantissa[i])) ? 1 : 0;
            }
        }
        CHECK(digits <= 17);
    }
}

TEST_CASE("double parsing is strict") {
    CHECK(parse_double("1e-3") == 1e-3);
    CHECK(parse_double("-0.25") == -0.25);
    for (const char *bad : {"", " 1", "1 ", "abc", "1.0x", "nan", "inf", "1,5"}) {
        CAPTURE(bad);
        CHECK(throws_code([&] { (void)parse_double(bad); }, ErrorCode::Parse));
    }
}

TEST_CASE("region CSV round trip") {
    for (std::size_t n : {2UL, 3UL, 9UL}) {
        std::vector<RegionRow> rows = boundary_rows(n);
        rows.push_back(make_row({0.123, 0.456, n}, std::nullopt));
        std::stringstream buf;
        write_region_csv(buf, rows);
        const std::string text = buf.str();
        CHECK(text.rfind(std::string(kRegionHeader) + "\n", 0) == 0);
        CHECK(text.find('\r') == std::string::npos);
        CHECK(text.find(",,") != std::string::npos);
        std::stringstream in(text);
        CHECK(read_region_csv(in) == rows);
    }
}

TEST_CASE("region CSV parse errors") {
    std::stringstream no_header("1,2,3\n");
    CHECK(throws_code([&] { (void)read_region_csv(no_header); }, ErrorCode::Parse));
    std::stringstream short_row(std::string(kRegionHeader) + "\n2,0,1,0\n");
    CHECK(throws_code([&] { (void)read_region_csv(short_row); }, ErrorCode::Parse));
    std::stringstream bad_num(std::string(kRegionHeader) + "\n2,0,x,0,1,0\n");
    CHECK(throws_code([&] { (void)read_region_csv(bad_num); }, ErrorCode::Parse));
}

TEST_CASE("game config JSON") {
    SECTION("defaults to the optimal symmetric configuration") {
        const GameConfig c = parse_game_config(R"({"schema": 1, "n": 4})");
        CHECK(c.n() == 4);
        CHECK(c.rho.is_maximally_coherent());
        CHECK(c.phases.is_canonical());
        CHECK(c.s(0, 1).real() == Catch::Approx(2.0 / 3.0));
    }
    SECTION("round trip") {
        GameConfig c = theorem1_config(3, 1234, 99);
        c.coin_bias = 0.25;
        c.threads = 3;
        const GameConfig back = parse_game_config(game_config_json(c));
        CHECK(back.trials == 1234);
        CHECK(back.seed == 99);
        CHECK(back.coin_bias == 0.25);
        CHECK(back.threads == 3);
        CHECK(back.rho.matrix() == c.rho.matrix());
        CHECK(back.s.matrix() == c.s.matrix());
        CHECK(back.phases.row_major() == c.phases.row_major());
    }
    SECTION("explicit matrices and phases") {
        const GameConfig c = parse_game_config(R"({
            "schema": 1, "n": 2, "trials": 10,
            "rho": {"n": 2, "re": [0.5, 0.25, 0.25, 0.5], "im": [0, 0.1, -0.1, 0]},
            "overlap": 0.3,
            "phases": [0, 0, 0, 1.5]})");
        CHECK(c.rho(0, 1) == cplx{0.25, 0.1});
        CHECK(c.s(1, 0).real() == 0.3);
        CHECK(c.phases(1, 1) == 1.5);
    }
    SECTION("errors") {
        const char *parse_errors[] = {
            "not json",
            R"({"n": 2})",
            R"({"schema": 2, "n": 2})",
            R"({"schema": 1, "n": 2, "bogus": 1})",
            R"({"schema": 1, "n": 2, "overlap": "x"})",
            R"({"schema": 1, "n": 2, "overlap": 0.5, "gram": {"re": [1, 0, 0, 1]}})",
            R"({"schema": 1, "n": 2, "rho": {"re": [1, 0, 0]}})",
            R"({"schema": 1, "n": 2, "trials": -3})",
            R"({"schema": 1, "n": 2, "rho": "pure"})",
            R"({"schema": 1, "n": 2, "overlap": NaN})",
        };
        for (const char *text : parse_errors) {
            CAPTURE(text);
            CHECK(throws_code([&] { (void)parse_game_config(text); }, ErrorCode::Parse));
        }
        CHECK(throws_code(
            [] {
                (void)parse_game_config(
                    R"({"schema": 1, "n": 2, "rho": {"re": [0.6, 0, 0, 0.6]}})");
            },
            ErrorCode::InvalidState));
        CHECK(throws_code([] { (void)load_game_config("/nonexistent/cfg.json"); },
                          ErrorCode::Io));
    }
}

TEST_CASE("physical config record round trip") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        const PhysicalConfig c = sample_config(3, 7, i);
        const PhysicalConfig back =
            parse_physical_config(physical_config_json(c.rho, c.s, c.phases));
        CHECK(back.rho.matrix() == c.rho.matrix());
        CHECK(back.s.matrix() == c.s.matrix());
        CHECK(back.phases.row_major() == c.phases.row_major());
    }
}

TEST_CASE("game stats records") {
    const GameStats s = run_combined(theorem1_config(2, 1000, 3));
    const std::string text = format_game_stats(s);
    for (const char *key : {"n=", "trials=", "seed=", "wins_ways=", "plays_ways=",
                            "wins_phases=", "plays_phases=", "empirical_pwin=",
                            "analytic_pwin=", "stderr="}) {
        const bool found = text.find(std::string("\n") + key) != std::string::npos ||
                           text.rfind(key, 0) == 0;
        CHECK(found);
    }
    const std::string json = game_stats_json(s);
    CHECK(json.find("\"stderr\"") != std::string::npos);
    CHECK(json.find("\"wins_ways\"") != std::string::npos);
}
