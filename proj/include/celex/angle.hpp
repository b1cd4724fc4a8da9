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

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace celex {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Largest arc step accepted when lifting a sampled circle path.
inline constexpr double kMaxLiftArc = kPi - 1e-6;

/// Representative of `a` modulo 2π in (−π, π].
[[nodiscard]] double wrap(double a);

/// |e^{ia} − e^{ib}| = 2 sin(|wrap(a − b)| / 2).
[[nodiscard]] double chord(double a, double b);

/// |wrap(a − b)|, the geodesic distance on the unit circle.
[[nodiscard]] double arc_distance(double a, double b);

/// Chord length subtended by an arc of `arc` radians, arc in [0, π].
[[nodiscard]] double chord_of_arc(double arc);

/// Inverse of chord_of_arc on [0, 2].
[[nodiscard]] double arc_of_chord(double chord_length);

/// Angle of a point on the circle, in (−π, π].
[[nodiscard]] double angle_of(std::complex<double> z);

/// A continuous real-valued lift of sampled circle-valued data.
struct AngleLift {
    std::vector<double> grid;
    std::vector<double> values;
};

/// Unwraps `points` starting from `base`. Throws GapTooLarge when an arc step
/// reaches kMaxLiftArc, because the continuation is then ambiguous.
[[nodiscard]] AngleLift lift_circle_path(std::span<const double> points, double base,
                                         std::span<const double> grid);

/// Same, on the uniform grid i / (N − 1).
[[nodiscard]] AngleLift lift_circle_path(std::span<const double> points, double base);

/// Exponential length of t ↦ e^{iαt} in C[0,1]:
/// min over k of max(|2kπ|, |α − 2kπ|).
[[nodiscard]] double cel_scalar_exponential(double alpha);

/// The integer k attaining cel_scalar_exponential (smallest |k| on ties).
[[nodiscard]] long optimal_winding(double alpha);

/// v_s(t) = exp(i s (α t − 2 k₀ π)) sampled on an (s, t) grid, row-major in s.
struct ScalarHomotopy {
    std::vector<double> s_grid;
    std::vector<double> t_grid;
    std::vector<std::complex<double>> values;

    [[nodiscard]] std::complex<double> at(std::size_t i, std::size_t l) const
    {
        return values[i * t_grid.size() + l];
    }
};

[[nodiscard]] ScalarHomotopy optimal_scalar_homotopy(double alpha, std::span<const double> s_grid,
                                                     std::span<const double> t_grid);

/// Σ_j max_t |v_{j+1}(t) − v_j(t)|.
[[nodiscard]] double scalar_homotopy_length(const ScalarHomotopy &h);

/// Uniform grid of `count` points on [0, 1].
[[nodiscard]] std::vector<double> uniform_grid(std::size_t count);

} // namespace celex
