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

#include "celex/corpus.hpp"

#include <cmath>
#include <random>

#include "celex/error.hpp"

namespace celex {

namespace {

Matrix diagonal_log(const AffineAngleFamily &f, double t)
{
    const auto a = f.angles(t);
    Matrix h = Matrix::Zero(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.size()));
    for (std::size_t j = 0; j < a.size(); ++j) {
        h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = a[j];
    }
    return h;
}

Eigen::Index family_dimension(const AffineAngleFamily &f)
{
    const auto size = f.total_size();
    CELEX_FAIL_IF(size == 0 || size > 64, ErrorCode::InvalidArgument,
                  "corpus families must have between 1 and 64 entries");
    return static_cast<Eigen::Index>(size);
}

} // namespace

UnitaryHomotopy detour_homotopy(const AffineAngleFamily &f, const Matrix &p, double loop_length,
                                const GridSpec &grid)
{
    const Eigen::Index n = family_dimension(f);
    CELEX_FAIL_IF(p.rows() != n || p.cols() != n, ErrorCode::DimensionMismatch,
                  "loop generator has the wrong size");
    return UnitaryHomotopy::from_function(
        n, uniform_grid(grid.s_points), uniform_grid(grid.t_points), [&](double s, double t) {
            if (s <= 0.5) {
                // Out and back: g rises to loop_length/2 at s = 1/4.
                const double g = 0.5 * loop_length * (1.0 - std::abs(4.0 * s - 1.0));
                return Matrix(exp_i(g * p));
            }
            return Matrix(exp_i((2.0 * s - 1.0) * diagonal_log(f, t)));
        });
}

std::vector<CorpusEntry> adversarial_corpus(const AffineAngleFamily &f, std::size_t count,
                                            std::uint64_t seed, const GridSpec &grid)
{
    const Eigen::Index n = family_dimension(f);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto s_grid = uniform_grid(grid.s_points);
    const auto t_grid = uniform_grid(grid.t_points);
    std::vector<CorpusEntry> corpus;
    for (std::size_t e = 0; e < count; ++e) {
        const std::string tag = std::to_string(e);
        switch (e % 4) {
        case 0: {
            const double power = 0.5 + 1.5 * unit(rng);
            corpus.push_back({"reparam-power-" + tag,
                              UnitaryHomotopy::from_function(n, s_grid, t_grid, [&](double s, double t) {
                                  return Matrix(exp_i(std::pow(s, power) * diagonal_log(f, t)));
                              })});
            break;
        }
        case 1: {
            // s ↦ s + a·s(1−s)·sin(2πt): monotone in s for |a| < 1.
            const double a = 1.6 * unit(rng) - 0.8;
            corpus.push_back(
                {"reparam-mixed-" + tag,
                 UnitaryHomotopy::from_function(n, s_grid, t_grid, [&](double s, double t) {
                     const double sigma = s + a * s * (1.0 - s) * std::sin(kTwoPi * t);
                     return Matrix(exp_i(sigma * diagonal_log(f, t)));
                 })});
            break;
        }
        case 2: {
            const Matrix p = random_hermitian(n, rng);
            const double loop = 0.5 + unit(rng);
            corpus.push_back({"detour-" + tag, detour_homotopy(f, p, loop, grid)});
            break;
        }
        default: {
            const Matrix k = (0.3 + 0.7 * unit(rng)) * random_hermitian(n, rng);
            corpus.push_back(
                {"conjugation-" + tag,
                 UnitaryHomotopy::from_function(n, s_grid, t_grid, [&](double s, double t) {
                     const Matrix w = exp_i(std::sin(kPi * s) * k);
                     return Matrix(w * exp_i(s * diagonal_log(f, t)) * w.adjoint());
                 })});
            break;
        }
        }
    }
    return corpus;
}

std::vector<CorpusEntry> collision_corpus(std::size_t count, std::uint64_t seed, const GridSpec &grid)
{
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto s_grid = uniform_grid(grid.s_points);
    const auto t_grid = uniform_grid(grid.t_points);
    std::vector<CorpusEntry> corpus;
    for (std::size_t e = 0; e < count; ++e) {
        const Eigen::Index n = 3 + static_cast<Eigen::Index>(e % 4);
        const bool simple_end = e % 2 == 1;
        std::vector<double> slope(static_cast<std::size_t>(n));
        std::vector<double> intercept(static_cast<std::size_t>(n), 0.0);
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto q = static_cast<std::size_t>(j);
            if (simple_end) {
                // Well separated on the circle for every t.
                intercept[q] = kTwoPi * (static_cast<double>(j) + 0.25 * unit(rng)) /
                               static_cast<double>(n);
                slope[q] = 0.5 * unit(rng);
            } else if (j == 1 || (j > 1 && unit(rng) < 0.5)) {
                slope[q] = slope[q - 1]; // repeated eigenvalue along the whole path
            } else {
                slope[q] = kTwoPi * (2.0 * unit(rng) - 1.0);
            }
        }
        const Matrix q = random_unitary(n, rng);
        corpus.push_back(
            {std::string(simple_end ? "collision-simple-end-" : "collision-repeated-") +
                 std::to_string(e),
             UnitaryHomotopy::from_function(n, s_grid, t_grid, [&](double s, double t) {
                 Matrix d = Matrix::Zero(n, n);
                 for (Eigen::Index j = 0; j < n; ++j) {
                     const auto k = static_cast<std::size_t>(j);
                     d(j, j) = std::polar(1.0, s * (slope[k] * t + intercept[k]));
                 }
                 return Matrix(q * d * q.adjoint());
             })});
    }
    return corpus;
}

} // namespace celex
