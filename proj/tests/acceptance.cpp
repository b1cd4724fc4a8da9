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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "selftest/acceptance.hpp"

int main()
{
    celex::selftest::SuiteOptions options;
    options.threads = std::max(1U, std::thread::hardware_concurrency());
    const auto results = celex::selftest::run_suite(options);
    celex::selftest::print_results(results, std::cout);
    return celex::selftest::all_passed(results) ? EXIT_SUCCESS : EXIT_FAILURE;
}
