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

#include <span>
#include <vector>

#include "celex/family.hpp"
#include "celex/goodearl.hpp"
#include "celex/homotopy.hpp"
#include "celex/multiset.hpp"

// Independent reference computations used to check the library.
namespace celex::oracle {

/// Minimum over all k! bijections of the largest matched distance.
[[nodiscard]] double permutation_bottleneck(std::span<const double> a, std::span<const double> b,
                                            Metric metric);

/// Largest singular value from a full SVD.
[[nodiscard]] double svd_norm(const Matrix &a);

/// min over k ∈ [k_lo, k_hi] of max(|2kπ|, |α − 2kπ|).
[[nodiscard]] double scalar_cel_by_search(double alpha, long k_lo, long k_hi);

/// Angles of the stage image at t, built by recursively writing out the
/// block-diagonal connecting maps entry by entry. Sorted ascending.
[[nodiscard]] std::vector<double> enumerate_goodearl(const AffineAngleFamily &f,
                                                     const GoodearlStage &stage, double t);

/// Minimum over nodes of the minimum over all eigenvalue pairs of the chord.
[[nodiscard]] double pairwise_gap_scan(const UnitaryHomotopy &f);

} // namespace celex::oracle
