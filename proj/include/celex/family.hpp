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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "celex/homotopy.hpp"
#include "celex/multiset.hpp"

namespace celex {

/// One diagonal entry t ↦ exp(i(slope·t + intercept)), repeated `mult` times.
struct AngleTerm {
    double slope = 0.0;
    double intercept = 0.0;
    std::uint64_t mult = 1;

    [[nodiscard]] double at(double t) const { return slope * t + intercept; }
    bool operator==(const AngleTerm &) const = default;
};

/// A diagonal unitary in M_L(C[0,1]) kept as a list of affine angle functions.
struct AffineAngleFamily {
    std::vector<AngleTerm> terms;

    [[nodiscard]] std::uint64_t total_size() const;
    /// Unwrapped angles at t, terms expanded in listed order.
    [[nodiscard]] std::vector<double> angles(double t) const;
    [[nodiscard]] CircleMultiset evaluate(double t) const;
    /// Σ mult·slope and Σ mult·intercept: the determinant is exp(i(a·t + b)).
    [[nodiscard]] double det_slope() const;
    [[nodiscard]] double det_intercept() const;
    /// The L×L diagonal matrix at t.
    [[nodiscard]] Matrix matrix(double t) const;
};

[[nodiscard]] AffineAngleFamily build_example_u();

/// Throws EpsOutOfRange unless 0 < eps ≤ 1/100.
[[nodiscard]] AffineAngleFamily build_u_eps(double eps);
void require_eps(double eps);

/// diag(e^{−2πit(10^k−1)/10^k}, e^{2πit/10^k} × (10^k − 1)).
[[nodiscard]] AffineAngleFamily near_2pi_family(int k);

/// sup_t max_j |angle_j(t)|, the norm of the obvious logarithm.
[[nodiscard]] double upper_bound_single_exponential(const AffineAngleFamily &f);

/// Pointwise sorted angles divided by 2π, one row of L values per t.
struct SortedBranches {
    std::vector<double> t_grid;
    std::size_t size = 0;
    std::vector<double> values;

    [[nodiscard]] double at(std::size_t k, std::size_t l) const { return values[l * size + k]; }
};

[[nodiscard]] SortedBranches sorted_branch_functions(const AffineAngleFamily &f,
                                                     std::span<const double> t_grid);

/// The k-th smallest angle at t divided by 2π, k counted from 1, without
/// expanding multiplicities.
[[nodiscard]] double order_statistic(const AffineAngleFamily &f, double t, std::uint64_t k);

enum class FamilyOrdering { as_listed, sorted };

/// exp(is·diag(angles(t) + offsets)) on the grid, optionally restricted to
/// the diagonal entries in `indices` (0-based, in the chosen ordering).
/// With non-empty offsets, throws OffsetCollision if two offset entries meet
/// at some t node.
[[nodiscard]] UnitaryHomotopy family_to_homotopy(const AffineAngleFamily &f,
                                                 std::span<const double> offsets,
                                                 std::vector<double> s_grid,
                                                 std::vector<double> t_grid,
                                                 FamilyOrdering ordering = FamilyOrdering::as_listed,
                                                 std::span<const std::size_t> indices = {});

} // namespace celex
