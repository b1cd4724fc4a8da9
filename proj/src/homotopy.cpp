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

#include "celex/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "celex/error.hpp"

namespace celex {

namespace {

void check_grid(const std::vector<double> &grid, const char *name)
{
    CELEX_FAIL_IF(grid.empty(), ErrorCode::InvalidArgument, std::string(name) + " is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CELEX_FAIL_IF(!(grid[i] >= 0.0 && grid[i] <= 1.0), ErrorCode::InvalidArgument,
                      std::string(name) + " leaves [0, 1]");
        CELEX_FAIL_IF(i > 0 && !(grid[i] > grid[i - 1]), ErrorCode::InvalidArgument,
                      std::string(name) + " is not strictly increasing");
    }
}

} // namespace

UnitaryPath UnitaryHomotopy::row(std::size_t i) const
{
    UnitaryPath path{t_grid, {}};
    path.matrices.assign(matrices.begin() + static_cast<long>(i * cols()),
                         matrices.begin() + static_cast<long>((i + 1) * cols()));
    return path;
}

UnitaryHomotopy UnitaryHomotopy::from_function(Eigen::Index n, std::vector<double> s_grid,
                                               std::vector<double> t_grid,
                                               const std::function<Matrix(double, double)> &fn)
{
    check_grid(s_grid, "s_grid");
    check_grid(t_grid, "t_grid");
    UnitaryHomotopy f{n, std::move(s_grid), std::move(t_grid), {}};
    f.matrices.reserve(f.rows() * f.cols());
    for (double s : f.s_grid) {
        for (double t : f.t_grid) {
            f.matrices.push_back(fn(s, t));
            CELEX_FAIL_IF(f.matrices.back().rows() != n || f.matrices.back().cols() != n,
                          ErrorCode::DimensionMismatch, "from_function: sample has wrong size");
        }
    }
    return f;
}

void UnitaryHomotopy::validate() const
{
    CELEX_FAIL_IF(n <= 0, ErrorCode::InvalidArgument, "homotopy dimension must be positive");
    check_grid(s_grid, "s_grid");
    check_grid(t_grid, "t_grid");
    CELEX_FAIL_IF(matrices.size() != rows() * cols(), ErrorCode::SizeMismatch,
                  "homotopy has the wrong number of samples");
    for (const auto &m : matrices) {
        CELEX_FAIL_IF(m.rows() != n || m.cols() != n, ErrorCode::DimensionMismatch,
                      "homotopy samples have mixed dimensions");
        require_unitary(m, "homotopy sample");
    }
}

UnitaryHomotopy constant_homotopy(const Matrix &value, std::vector<double> s_grid,
                                  std::vector<double> t_grid)
{
    return UnitaryHomotopy::from_function(value.rows(), std::move(s_grid), std::move(t_grid),
                                          [&](double, double) { return value; });
}

UnitaryHomotopy embed_scalar(const ScalarHomotopy &h)
{
    UnitaryHomotopy f{1, h.s_grid, h.t_grid, {}};
    f.matrices.reserve(h.values.size());
    for (const auto &z : h.values) {
        f.matrices.push_back(Matrix::Constant(1, 1, z));
    }
    return f;
}

std::vector<double> homotopy_step_norms(const UnitaryHomotopy &f)
{
    std::vector<double> steps;
    if (f.rows() < 2) {
        return steps;
    }
    steps.reserve(f.rows() - 1);
    for (std::size_t i = 1; i < f.rows(); ++i) {
        double step = 0.0;
        for (std::size_t l = 0; l < f.cols(); ++l) {
            step = std::max(step, operator_norm(f.at(i, l) - f.at(i - 1, l)));
        }
        steps.push_back(step);
    }
    return steps;
}

double homotopy_length(const UnitaryHomotopy &f)
{
    double total = 0.0;
    for (double m : homotopy_step_norms(f)) {
        total += m;
    }
    return total;
}

double homotopy_arc_length(const UnitaryHomotopy &f)
{
    double total = 0.0;
    for (double m : homotopy_step_norms(f)) {
        total += arc_of_chord(m);
    }
    return total;
}

double sup_distance(const UnitaryHomotopy &f, const UnitaryHomotopy &g)
{
    CELEX_FAIL_IF(f.matrices.size() != g.matrices.size() || f.n != g.n,
                  ErrorCode::DimensionMismatch, "sup_distance: homotopies differ in shape");
    double d = 0.0;
    for (std::size_t k = 0; k < f.matrices.size(); ++k) {
        d = std::max(d, operator_norm(f.matrices[k] - g.matrices[k]));
    }
    return d;
}

namespace {

UnitaryHomotopy insert_midpoints(const UnitaryHomotopy &f, const std::vector<bool> &split)
{
    UnitaryHomotopy out{f.n, {}, f.t_grid, {}};
    for (std::size_t i = 0; i < f.rows(); ++i) {
        if (i > 0 && split[i - 1]) {
            out.s_grid.push_back(0.5 * (f.s_grid[i - 1] + f.s_grid[i]));
            for (std::size_t l = 0; l < f.cols(); ++l) {
                out.matrices.push_back(Geodesic(f.at(i - 1, l), f.at(i, l)).at(0.5));
            }
        }
        out.s_grid.push_back(f.s_grid[i]);
        for (std::size_t l = 0; l < f.cols(); ++l) {
            out.matrices.push_back(f.at(i, l));
        }
    }
    return out;
}

} // namespace

UnitaryHomotopy refine_s_until(const UnitaryHomotopy &f, double max_step, int max_depth)
{
    UnitaryHomotopy current = f;
    for (int depth = 0;; ++depth) {
        const auto steps = homotopy_step_norms(current);
        std::vector<bool> split(steps.size());
        bool any = false;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            split[i] = !(steps[i] < max_step);
            any = any || split[i];
        }
        if (!any) {
            return current;
        }
        CELEX_FAIL_IF(depth >= max_depth, ErrorCode::TooFarApart,
                      "refine_s_until: step norms stay above " + std::to_string(max_step));
        current = insert_midpoints(current, split);
    }
}

UnitaryHomotopy bisect_s(const UnitaryHomotopy &f)
{
    return insert_midpoints(f, std::vector<bool>(f.rows() > 0 ? f.rows() - 1 : 0, true));
}

double chord_arc_excess(double chord_length)
{
    if (chord_length <= 1e-6) {
        // 2 asin(c/2) / c = 1 + c²/24 + O(c⁴)
        return chord_length * chord_length / 24.0;
    }
    return arc_of_chord(chord_length) / chord_length - 1.0;
}

} // namespace celex
