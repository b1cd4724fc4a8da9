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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "celex/family.hpp"

namespace celex {

/// Finite stage of the Goodearl-type inductive system: levels k₂,…,k_n and
/// evaluation points x₁,…,x_{n−1}. Each connecting map sends f to
/// diag(f, …, f, f(x_i)) with 10^{k} − 1 copies of f.
struct GoodearlStage {
    std::vector<int> levels;
    std::vector<double> points;
    std::optional<double> eps;

    /// Points default to x_i = i/(n+1).
    static GoodearlStage with_default_points(std::vector<int> levels,
                                             std::optional<double> eps = std::nullopt);

    [[nodiscard]] std::uint64_t alpha() const;
    [[nodiscard]] std::uint64_t beta() const { return 9 * alpha(); }
    [[nodiscard]] std::uint64_t gamma() const { return size() - alpha() - beta(); }
    [[nodiscard]] std::uint64_t size() const;
    /// Π (10^k − 1)/10^k.
    [[nodiscard]] double admissibility() const;
    [[nodiscard]] bool admissible() const { return admissibility() > 11.0 / 12.0; }

    /// Throws InvalidArgument on malformed levels or points.
    void validate() const;
};

/// The image of f at the final stage. Throws InadmissibleStage.
[[nodiscard]] AffineAngleFamily goodearl_image(const AffineAngleFamily &f, const GoodearlStage &stage);

/// As goodearl_image without the admissibility requirement.
[[nodiscard]] AffineAngleFamily goodearl_image_unchecked(const AffineAngleFamily &f,
                                                         const GoodearlStage &stage);

struct MiddleBranchWitness {
    double t = 0.0;
    std::uint64_t k = 0;
    std::string reason;
};

struct MiddleBranchReport {
    bool pass = false;
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    std::uint64_t gamma = 0;
    /// Largest count of values strictly below / above the target over the grid.
    std::uint64_t max_below = 0;
    std::uint64_t max_above = 0;
    std::size_t points_checked = 0;
    std::vector<MiddleBranchWitness> witnesses;
};

/// Checks on t_grid that ȳ_k(t) = −(9/10 − eps)·t for every γ < k ≤ α.
/// Failures are reported, not thrown.
[[nodiscard]] MiddleBranchReport check_middle_branch(const AffineAngleFamily &f,
                                                     const GoodearlStage &stage, double eps,
                                                     std::span<const double> t_grid);

} // namespace celex
