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
#include <iosfwd>
#include <vector>

#include "celex/homotopy.hpp"

namespace celex {

/// k continuous angle lifts φ_j(s_i, t_l) through the spectra of a homotopy
/// with simple spectrum, on the homotopy's own grid.
struct BranchSet {
    std::size_t k = 0;
    std::vector<double> s_grid;
    std::vector<double> t_grid;
    std::vector<double> lifts; ///< index ((i * |t| + l) * k + j)
    double gap = 0.0;          ///< smallest pairwise eigenvalue chord over the grid
    std::size_t substeps = 0;  ///< geodesic bisection nodes inserted while matching
    int depth_used = 0;

    [[nodiscard]] double lift(std::size_t j, std::size_t i, std::size_t l) const
    {
        return lifts[(i * t_grid.size() + l) * k + j];
    }
};

struct TrackOptions {
    /// Bisection depth allowed per grid step before giving up.
    int max_depth = 20;
    /// Verify along t at every s that the column lifts agree.
    bool check_rows = true;
    unsigned threads = 1;
};

/// Lifts the eigenvalues of F to k continuous branches: along t at s = 0 from
/// the base node, then along s in every t-column, then a consistency pass
/// along t at every s. A step is matched only when the arc neighbourhood of
/// the previous spectrum, with radius set by the step norm, splits into
/// components that keep their eigenvalue counts; inside a component the
/// sorted order is kept. Below half the spectral gap every component is a
/// single eigenvalue. Otherwise the step is bisected along the geodesic
/// between the two samples. Throws AmbiguousMatchingError when the depth
/// limit is hit.
[[nodiscard]] BranchSet track_branches(const UnitaryHomotopy &f, const TrackOptions &options = {});

/// max_t |φ_j(1, t) − φ_j(0, t)|.
[[nodiscard]] double branch_displacement_bound(const BranchSet &b, std::size_t j);

/// Σ_i max_t chord(φ_j(s_i, t), φ_j(s_{i−1}, t)).
[[nodiscard]] double branch_length(const BranchSet &b, std::size_t j);

/// Largest bottleneck distance between the branch values and the spectrum
/// at any node.
[[nodiscard]] double branch_consistency(const BranchSet &b, const UnitaryHomotopy &f);

/// Largest |φ_j − ψ_j| over nodes shared by two branch sets (grid values
/// compared exactly).
[[nodiscard]] double lift_agreement(const BranchSet &a, const BranchSet &b);

/// CSV with header `j,s,t,phi`.
void write_branch_csv(const BranchSet &b, std::ostream &out);

} // namespace celex
