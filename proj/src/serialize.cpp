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

#include "duality/serialize.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "duality/error.hpp"
#include "json.hpp"

namespace duality {

using nlohmann::json;

std::string format_double(double v) {
    DUALITY_REQUIRE(std::isfinite(v), ErrorCode::OutOfRange,
                    "cannot format a non-finite value");
    std::array<char, 64> buf{};
    // general keeps large integers in exponent form (at most 17 digits)
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general);
    return {buf.data(), res.ptr};
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    const auto res = std::from_chars(begin, end, v);
    DUALITY_REQUIRE(res.ec == std::errc{} && res.ptr == end && std::isfinite(v),
                    ErrorCode::Parse,
                    "not a finite number: '" + std::string(text) + "'");
    return v;
}

void write_region_csv(std::ostream &out, const std::vector<RegionRow> &rows) {
    out << kRegionHeader << '\n';
    for (const RegionRow &r : rows) {
        out << r.n << ',';
        if (r.s_or_t) {
            out << format_double(*r.s_or_t);
        }
        out << ',' << format_double(r.x) << ',' << format_double(r.y) << ','
            << format_double(r.ellipse_form) << ','
            << format_double(r.lemma1_lhs) << '\n';
    }
    DUALITY_REQUIRE(out.good(), ErrorCode::Io, "CSV write failed");
}

std::vector<RegionRow> read_region_csv(std::istream &in) {
    std::string line;
    DUALITY_REQUIRE(static_cast<bool>(std::getline(in, line)) &&
                        line == kRegionHeader,
                    ErrorCode::Parse, "missing or wrong CSV header");
    std::vector<RegionRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        for (;;) {
            const std::size_t comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        DUALITY_REQUIRE(fields.size() == 6, ErrorCode::Parse,
                        "line " + std::to_string(lineno) +
                            ": expected 6 fields");
        RegionRow r;
        std::size_t n = 0;
        const auto nres = std::from_chars(
            fields[0].data(), fields[0].data() + fields[0].size(), n);
        DUALITY_REQUIRE(nres.ec == std::errc{} &&
                            nres.ptr == fields[0].data() + fields[0].size(),
                        ErrorCode::Parse,
                        "line " + std::to_string(lineno) + ": bad n");
        r.n = n;
        if (!fields[1].empty()) {
            r.s_or_t = parse_double(fields[1]);
        }
        r.x = parse_double(fields[2]);
        r.y = parse_double(fields[3]);
        r.ellipse_form = parse_double(fields[4]);
        r.lemma1_lhs = parse_double(fields[5]);
        rows.push_back(r);
    }
    return rows;
}

std::string format_game_stats(const GameStats &s) {
    std::ostringstream out;
    out << "n=" << s.n << '\n'
        << "trials=" << s.trials << '\n'
        << "seed=" << s.seed << '\n'
        << "wins_ways=" << s.wins_ways << '\n'
        << "plays_ways=" << s.plays_ways << '\n'
        << "wins_phases=" << s.wins_phases << '\n'
        << "plays_phases=" << s.plays_phases << '\n'
        << "empirical_pwin=" << format_double(s.empirical_pwin) << '\n'
        << "analytic_pwin=" << format_double(s.analytic_pwin) << '\n'
        << "stderr=" << format_double(s.std_error) << '\n'
        << "consistent=" << (s.consistent() ? "true" : "false") << '\n';
    return out.str();
}

std::string game_stats_json(const GameStats &s) {
    json j = json::object();
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["wins_ways"] = s.wins_ways;
    j["plays_ways"] = s.plays_ways;
    j["wins_phases"] = s.wins_phases;
    j["plays_phases"] = s.plays_phases;
    j["empirical_pwin"] = s.empirical_pwin;
    j["analytic_pwin"] = s.analytic_pwin;
    j["stderr"] = s.std_error;
    j["consistent"] = s.consistent();
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void parse_fail(const std::string &msg) {
    throw Error(ErrorCode::Parse, msg);
}

double number(const json &v, const char *key) {
    if (!v.is_number()) {
        parse_fail(std::string(key) + ": expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        parse_fail(std::string(key) + ": non-finite number");
    }
    return d;
}

std::uint64_t unsigned_number(const json &v, const char *key) {
    if (!v.is_number_unsigned() &&
        !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        parse_fail(std::string(key) + ": expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<double> flat_numbers(const json &v, std::size_t count,
                                 const std::string &key) {
    if (!v.is_array() || v.size() != count) {
        parse_fail(key + ": expected an array of " + std::to_string(count) +
                   " numbers");
    }
    std::vector<double> out;
    out.reserve(count);
    for (const json &e : v) {
        out.push_back(number(e, key.c_str()));
    }
    return out;
}

// {"n": n, "re": [row-major], "im": [row-major]}; "n" and "im" optional.
ComplexMatrix matrix_from(const json &v, std::size_t n, const char *key) {
    if (!v.is_object() || !v.contains("re")) {
        parse_fail(std::string(key) + ": expected an object with \"re\"");
    }
    if (v.contains("n") && unsigned_number(v["n"], key) != n) {
        parse_fail(std::string(key) + ": dimension disagrees with n");
    }
    const std::vector<double> re =
        flat_numbers(v["re"], n * n, std::string(key) + ".re");
    const std::vector<double> im =
        v.contains("im") ? flat_numbers(v["im"], n * n, std::string(key) + ".im")
                         : std::vector<double>(n * n, 0.0);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n * n; ++i) {
        m.entries()[i] = {re[i], im[i]};
    }
    return m;
}

json matrix_to(const ComplexMatrix &m) {
    json re = json::array();
    json im = json::array();
    for (const cplx &z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return {{"n", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json phases_to(const PhaseSet &p) { return p.row_major(); }

PhaseSet phases_from(const json &v, std::size_t n) {
    if (v.is_string()) {
        if (v.get<std::string>() != "canonical") {
            parse_fail("phases: unknown preset '" + v.get<std::string>() + "'");
        }
        return PhaseSet::canonical(n);
    }
    return {n, flat_numbers(v, n * n, "phases")};
}

json parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        parse_fail(e.what());
    }
    if (!doc.is_object()) {
        parse_fail("document must be a JSON object");
    }
    if (!doc.contains("schema") || !doc["schema"].is_number_integer() ||
        doc["schema"].get<std::int64_t>() != 1) {
        parse_fail("missing or unsupported schema (expected \"schema\": 1)");
    }
    return doc;
}

} // namespace

GameConfig parse_game_config(std::string_view text) {
    const json doc = parse_document(text);
    static const std::array<const char *, 10> known = {
        "schema", "n",       "trials", "seed",  "coin_bias",
        "threads", "rho",    "gram",   "overlap", "phases"};
    for (const auto &item : doc.items()) {
        if (std::find_if(known.begin(), known.end(), [&](const char *k) {
                return item.key() == k;
            }) == known.end()) {
            parse_fail("unknown key '" + item.key() + "'");
        }
    }

    const std::size_t n =
        doc.contains("n") ? unsigned_number(doc["n"], "n") : 2;
    DUALITY_REQUIRE(n >= 2, ErrorCode::InvalidDim, "n must be >= 2");
    GameConfig cfg = theorem1_config(n, 1, 0);
    if (doc.contains("trials")) {
        cfg.trials = unsigned_number(doc["trials"], "trials");
    }
    if (doc.contains("seed")) {
        cfg.seed = unsigned_number(doc["seed"], "seed");
    }
    if (doc.contains("coin_bias")) {
        cfg.coin_bias = number(doc["coin_bias"], "coin_bias");
    }
    if (doc.contains("threads")) {
        cfg.threads =
            static_cast<unsigned>(unsigned_number(doc["threads"], "threads"));
    }
    if (doc.contains("rho")) {
        const json &v = doc["rho"];
        if (v.is_string()) {
            if (v.get<std::string>() != "maximally_coherent") {
                parse_fail("rho: unknown preset '" + v.get<std::string>() +
                           "'");
            }
        } else {
            cfg.rho = DensityMatrix(matrix_from(v, n, "rho"));
        }
    }
    if (doc.contains("gram") && doc.contains("overlap")) {
        parse_fail("give either gram or overlap, not both");
    }
    if (doc.contains("gram")) {
        cfg.s = DetectorGram(matrix_from(doc["gram"], n, "gram"));
    }
    if (doc.contains("overlap")) {
        cfg.s = DetectorGram::constant_overlap(
            n, number(doc["overlap"], "overlap"));
    }
    if (doc.contains("phases")) {
        cfg.phases = phases_from(doc["phases"], n);
    }
    cfg.validate();
    return cfg;
}

GameConfig load_game_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    DUALITY_REQUIRE(in.good(), ErrorCode::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_game_config(buf.str());
}

std::string game_config_json(const GameConfig &cfg) {
    json j = json::object();
    j["schema"] = 1;
    j["n"] = cfg.n();
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["coin_bias"] = cfg.coin_bias;
    j["threads"] = cfg.threads;
    j["rho"] = matrix_to(cfg.rho.matrix());
    j["gram"] = matrix_to(cfg.s.matrix());
    j["phases"] = phases_to(cfg.phases);
    return j.dump(2) + "\n";
}

PhysicalConfig parse_physical_config(std::string_view text) {
    const json doc = parse_document(text);
    for (const char *key : {"n", "rho", "gram", "phases"}) {
        if (!doc.contains(key)) {
            parse_fail(std::string("missing key '") + key + "'");
        }
    }
    const std::size_t n = unsigned_number(doc["n"], "n");
    DUALITY_REQUIRE(n >= 2, ErrorCode::InvalidDim, "n must be >= 2");
    return {DensityMatrix(matrix_from(doc["rho"], n, "rho")),
            DetectorGram(matrix_from(doc["gram"], n, "gram")),
            phases_from(doc["phases"], n)};
}

std::string physical_config_json(const DensityMatrix &rho,
                                 const DetectorGram &s, const PhaseSet &p) {
    json j = json::object();
    j["schema"] = 1;
    j["n"] = rho.dim();
    j["rho"] = matrix_to(rho.matrix());
    j["gram"] = matrix_to(s.matrix());
    j["phases"] = phases_to(p);
    return j.dump(2) + "\n";
}

} // namespace duality
