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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace celex {

/// Runs fn(i) for i in [0, count) on up to `threads` workers using a static
/// interleaved split. If several indices throw, the exception of the smallest
/// index is rethrown, so failures do not depend on the thread count.
template <typename Fn> void parallel_for(std::size_t count, unsigned threads, Fn &&fn)
{
    const auto workers = static_cast<std::size_t>(std::max(1U, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::mutex guard;
    std::size_t failed_index = count;
    std::exception_ptr failure;
    auto body = [&](std::size_t offset) {
        for (std::size_t i = offset; i < count; i += workers) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(guard);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers, count); ++w) {
        pool.emplace_back(body, w);
    }
    body(0);
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace celex
