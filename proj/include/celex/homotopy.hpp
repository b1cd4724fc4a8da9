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

#include <functional>
#include <vector>

#include "celex/angle.hpp"
#include "celex/unitary.hpp"

namespace celex {

/// A unitary in M_n(C[0,1]) sampled on a t-grid.
struct UnitaryPath {
    std::vector<double> t_grid;
    std::vector<Matrix> matrices;
};

/// An (s, t)-grid of n×n unitaries, stored row-major in s. Row s = 0 is the
/// start of the path in U(M_n(C[0,1])) and row s = 1 its end. Between grid rows
/// the homotopy is read as the piecewise geodesic through the samples.
struct UnitaryHomotopy {
    Eigen::Index n = 0;
    std::vector<double> s_grid;
    std::vector<double> t_grid;
    std::vector<Matrix> matrices;

    [[nodiscard]] std::size_t rows() const { return s_grid.size(); }
    [[nodiscard]] std::size_t cols() const { return t_grid.size(); }

    [[nodiscard]] const Matrix &at(std::size_t i, std::size_t l) const
    {
        return matrices[i * t_grid.size() + l];
    }
    [[nodiscard]] Matrix &at(std::size_t i, std::size_t l) { return matrices[i * t_grid.size() + l]; }

    [[nodiscard]] UnitaryPath row(std::size_t i) const;

    /// Samples fn(s, t) on the grid.
    static UnitaryHomotopy from_function(Eigen::Index n, std::vector<double> s_grid,
                                         std::vector<double> t_grid,
                                         const std::function<Matrix(double, double)> &fn);

    /// Throws on bad grids, mixed dimensions or non-unitary samples.
    void validate() const;
};

[[nodiscard]] UnitaryHomotopy constant_homotopy(const Matrix &value, std::vector<double> s_grid,
                                                std::vector<double> t_grid);

/// The scalar homotopy as 1×1 matrices.
[[nodiscard]] UnitaryHomotopy embed_scalar(const ScalarHomotopy &h);

/// max_t ‖F_{s_{j+1}}(t) − F_{s_j}(t)‖ for each j.
[[nodiscard]] std::vector<double> homotopy_step_norms(const UnitaryHomotopy &f);

/// Σ_j max_t ‖F_{s_{j+1}}(t) − F_{s_j}(t)‖. A lower bound for the length of
/// the continuous path and nondecreasing under refinement of the s-grid.
[[nodiscard]] double homotopy_length(const UnitaryHomotopy &f);

/// Length of the piecewise-geodesic path through the rows, with the sup over
/// t taken on the grid: Σ_j 2 asin(m_j / 2).
[[nodiscard]] double homotopy_arc_length(const UnitaryHomotopy &f);

/// Sup over the grid of ‖F − G‖.
[[nodiscard]] double sup_distance(const UnitaryHomotopy &f, const UnitaryHomotopy &g);

/// Inserts geodesic midpoint rows until every step norm is below max_step.
[[nodiscard]] UnitaryHomotopy refine_s_until(const UnitaryHomotopy &f, double max_step,
                                             int max_depth = 20);

/// Inserts a geodesic midpoint row after every row (uniform bisection in s).
[[nodiscard]] UnitaryHomotopy bisect_s(const UnitaryHomotopy &f);

/// ε₁ with 2 asin(c/2) = (1 + ε₁) c at the given chord length c.
[[nodiscard]] double chord_arc_excess(double chord_length);

} // namespace celex
