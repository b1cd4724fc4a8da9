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

#include <Eigen/Dense>

namespace celex {

/// Unordered tuple of reals; an element of the symmetric product of ℝ.
struct RealMultiset {
    std::vector<double> values;
};

/// Unordered tuple of angles; an element of the symmetric product of S¹.
/// Equality is up to permutation and per-element 2π shifts.
struct CircleMultiset {
    std::vector<double> angles;
};

enum class Metric { chordal, arc, absolute };

[[nodiscard]] double point_distance(double a, double b, Metric metric);

/// min over bijections σ of max_i d(a_i, b_σ(i)). Binary search over the k²
/// candidate distances with a perfect-matching feasibility test.
[[nodiscard]] double bottleneck_distance(std::span<const double> a, std::span<const double> b,
                                         Metric metric);

[[nodiscard]] double bottleneck_distance(const RealMultiset &a, const RealMultiset &b);
[[nodiscard]] double bottleneck_distance(const CircleMultiset &a, const CircleMultiset &b,
                                         Metric metric = Metric::chordal);

/// The sorting map θ: stable nondecreasing arrangement of the multiset.
[[nodiscard]] std::vector<double> sort_lift_theta(const RealMultiset &a);

/// max_i |x_i − y_i|.
[[nodiscard]] double d_max(std::span<const double> x, std::span<const double> y);

struct WeylGap {
    double spectral; ///< chordal bottleneck distance between the spectra
    double operator_norm; ///< ‖U − V‖
};

/// Both sides of the spectral matching inequality for a pair of unitaries.
[[nodiscard]] WeylGap weyl_gap(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v);

} // namespace celex
