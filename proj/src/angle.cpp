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

#include "celex/angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "celex/error.hpp"

namespace celex {

double wrap(double a)
{
    CELEX_FAIL_IF(!std::isfinite(a), ErrorCode::NonFinite, "wrap: non-finite angle");
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

double arc_distance(double a, double b) { return std::abs(wrap(a - b)); }

double chord(double a, double b) { return chord_of_arc(arc_distance(a, b)); }

double chord_of_arc(double arc) { return 2.0 * std::sin(0.5 * arc); }

double arc_of_chord(double chord_length)
{
    return 2.0 * std::asin(std::clamp(0.5 * chord_length, 0.0, 1.0));
}

double angle_of(std::complex<double> z)
{
    const double a = std::arg(z);
    return a <= -kPi ? kPi : a;
}

AngleLift lift_circle_path(std::span<const double> points, double base,
                           std::span<const double> grid)
{
    CELEX_FAIL_IF(points.empty(), ErrorCode::InvalidArgument, "lift_circle_path: empty path");
    CELEX_FAIL_IF(grid.size() != points.size(), ErrorCode::SizeMismatch,
                  "lift_circle_path: grid and points differ in length");
    CELEX_FAIL_IF(std::abs(wrap(base - points[0])) > 1e-9, ErrorCode::InvalidArgument,
                  "lift_circle_path: base is not a lift of the first point");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CELEX_FAIL_IF(!(grid[i] > grid[i - 1]), ErrorCode::InvalidArgument,
                      "lift_circle_path: grid must be strictly increasing");
    }

    AngleLift lift;
    lift.grid.assign(grid.begin(), grid.end());
    lift.values.reserve(points.size());
    lift.values.push_back(base);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double step = wrap(points[i] - points[i - 1]);
        if (std::abs(step) >= kMaxLiftArc) {
            throw Error(ErrorCode::GapTooLarge,
                        "lift_circle_path: arc step " + std::to_string(step) + " at index " +
                            std::to_string(i) + " is too close to π; refine the grid");
        }
        lift.values.push_back(lift.values.back() + step);
    }
    return lift;
}

AngleLift lift_circle_path(std::span<const double> points, double base)
{
    const auto grid = uniform_grid(points.size());
    return lift_circle_path(points, base, grid);
}

namespace {

double winding_cost(double alpha, long k)
{
    const double shift = kTwoPi * static_cast<double>(k);
    return std::max(std::abs(shift), std::abs(alpha - shift));
}

} // namespace

long optimal_winding(double alpha)
{
    CELEX_FAIL_IF(!std::isfinite(alpha), ErrorCode::NonFinite, "non-finite alpha");
    // Outside this window max(|2kπ|, |α − 2kπ|) ≥ 2π⌈|α|/2π⌉, which k = 0 or the
    // nearest winding already beats.
    const long window = static_cast<long>(std::ceil(std::abs(alpha) / kTwoPi)) + 1;
    long best = 0;
    double best_cost = winding_cost(alpha, 0);
    for (long m = 1; m <= window; ++m) {
        for (long k : {m, -m}) {
            const double c = winding_cost(alpha, k);
            if (c < best_cost) {
                best_cost = c;
                best = k;
            }
        }
    }
    return best;
}

double cel_scalar_exponential(double alpha)
{
    return winding_cost(alpha, optimal_winding(alpha));
}

ScalarHomotopy optimal_scalar_homotopy(double alpha, std::span<const double> s_grid,
                                       std::span<const double> t_grid)
{
    CELEX_FAIL_IF(s_grid.empty() || t_grid.empty(), ErrorCode::InvalidArgument,
                  "optimal_scalar_homotopy: empty grid");
    const double shift = kTwoPi * static_cast<double>(optimal_winding(alpha));
    ScalarHomotopy h;
    h.s_grid.assign(s_grid.begin(), s_grid.end());
    h.t_grid.assign(t_grid.begin(), t_grid.end());
    h.values.reserve(s_grid.size() * t_grid.size());
    for (double s : s_grid) {
        for (double t : t_grid) {
            h.values.push_back(std::polar(1.0, s * (alpha * t - shift)));
        }
    }
    return h;
}

double scalar_homotopy_length(const ScalarHomotopy &h)
{
    double total = 0.0;
    const std::size_t nt = h.t_grid.size();
    for (std::size_t i = 1; i < h.s_grid.size(); ++i) {
        double step = 0.0;
        for (std::size_t l = 0; l < nt; ++l) {
            step = std::max(step, std::abs(h.at(i, l) - h.at(i - 1, l)));
        }
        total += step;
    }
    return total;
}

std::vector<double> uniform_grid(std::size_t count)
{
    CELEX_FAIL_IF(count == 0, ErrorCode::InvalidArgument, "uniform_grid: empty grid");
    std::vector<double> grid(count, 0.0);
    if (count == 1) {
        return grid;
    }
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    grid.back() = 1.0;
    return grid;
}

} // namespace celex
