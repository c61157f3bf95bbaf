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

/// @file
/// Built-in invariant suites behind `duality verify`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace duality {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] std::string to_json() const;
};

/// numerics, interferometer, discrimination, duality, game, cli
const std::vector<std::string> &verify_suite_names();

/// Runs the named suites (all when `suites` is empty). Throws OutOfRange on
/// an unknown suite name. Exceptions inside a check count as failures.
VerifyReport run_verify(std::uint64_t seed,
                        const std::vector<std::string> &suites = {});

} // namespace duality
