// Copyright 2026 The celex Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace celex::selftest {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0; ///< zero when the criterion has none
};

struct SuiteOptions {
    std::uint64_t seed = 20261015;
    unsigned threads = 1;
    /// Criterion names or numbers; empty runs everything.
    std::vector<std::string> subset;
};

/// Names in order: scalar, theta, weyl, ex310, adversarial, goodearl, trend,
/// perturb, tracking.
[[nodiscard]] const std::vector<std::string> &criterion_names();

/// Throws InvalidArgument for unknown subset entries.
[[nodiscard]] std::vector<CriterionResult> run_suite(const SuiteOptions &options);

/// One line per criterion: `[PASS] 4 ex310 (12.3 s): detail`.
void print_results(const std::vector<CriterionResult> &results, std::ostream &out);

[[nodiscard]] bool all_passed(const std::vector<CriterionResult> &results);

} // namespace celex::selftest
