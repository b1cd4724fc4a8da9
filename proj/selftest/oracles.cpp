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

#include "selftest/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace celex::oracle {

double permutation_bottleneck(std::span<const double> a, std::span<const double> b, Metric metric)
{
    std::vector<std::size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, point_distance(a[i], b[perm[i]], metric));
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double svd_norm(const Matrix &a)
{
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues()(0);
}

double scalar_cel_by_search(double alpha, long k_lo, long k_hi)
{
    double best = std::numeric_limits<double>::infinity();
    for (long k = k_lo; k <= k_hi; ++k) {
        const double shift = 2.0 * static_cast<double>(k) * std::numbers::pi;
        best = std::min(best, std::max(std::abs(shift), std::abs(alpha - shift)));
    }
    return best;
}

namespace {

std::vector<double> stage_values(const AffineAngleFamily &f, const GoodearlStage &stage,
                                 std::size_t level, double t)
{
    if (level == 0) {
        std::vector<double> out;
        for (const auto &term : f.terms) {
            for (std::uint64_t m = 0; m < term.mult; ++m) {
                out.push_back(term.slope * t + term.intercept);
            }
        }
        return out;
    }
    const auto block = stage_values(f, stage, level - 1, t);
    const auto frozen = stage_values(f, stage, level - 1, stage.points[level - 1]);
    std::size_t copies = 1;
    for (int d = 0; d < stage.levels[level - 1]; ++d) {
        copies *= 10;
    }
    copies -= 1;
    std::vector<double> out;
    out.reserve(copies * block.size() + frozen.size());
    for (std::size_t c = 0; c < copies; ++c) {
        out.insert(out.end(), block.begin(), block.end());
    }
    out.insert(out.end(), frozen.begin(), frozen.end());
    return out;
}

} // namespace

std::vector<double> enumerate_goodearl(const AffineAngleFamily &f, const GoodearlStage &stage,
                                       double t)
{
    auto out = stage_values(f, stage, stage.levels.size(), t);
    std::sort(out.begin(), out.end());
    return out;
}

double pairwise_gap_scan(const UnitaryHomotopy &f)
{
    double gap = std::numeric_limits<double>::infinity();
    for (const auto &m : f.matrices) {
        Eigen::ComplexEigenSolver<Matrix> solver(m, false);
        const auto &ev = solver.eigenvalues();
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            for (Eigen::Index j = i + 1; j < ev.size(); ++j) {
                const auto zi = ev(i) / std::abs(ev(i));
                const auto zj = ev(j) / std::abs(ev(j));
                gap = std::min(gap, std::abs(zi - zj));
            }
        }
    }
    return gap;
}

} // namespace celex::oracle
