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

#include "celex/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "celex/error.hpp"
#include "celex/perturb.hpp"

namespace celex {

namespace {

std::vector<std::pair<double, std::uint64_t>> sorted_values(const AffineAngleFamily &f, double t)
{
    std::vector<std::pair<double, std::uint64_t>> v;
    v.reserve(f.terms.size());
    for (const auto &term : f.terms) {
        v.emplace_back(term.at(t), term.mult);
    }
    std::sort(v.begin(), v.end());
    return v;
}

double pow10(int k) { return std::pow(10.0, k); }

} // namespace

std::uint64_t AffineAngleFamily::total_size() const
{
    std::uint64_t total = 0;
    for (const auto &term : terms) {
        total += term.mult;
    }
    return total;
}

std::vector<double> AffineAngleFamily::angles(double t) const
{
    std::vector<double> out;
    out.reserve(total_size());
    for (const auto &term : terms) {
        out.insert(out.end(), term.mult, term.at(t));
    }
    return out;
}

CircleMultiset AffineAngleFamily::evaluate(double t) const { return CircleMultiset{angles(t)}; }

double AffineAngleFamily::det_slope() const
{
    double sum = 0.0;
    for (const auto &term : terms) {
        sum += static_cast<double>(term.mult) * term.slope;
    }
    return sum;
}

double AffineAngleFamily::det_intercept() const
{
    double sum = 0.0;
    for (const auto &term : terms) {
        sum += static_cast<double>(term.mult) * term.intercept;
    }
    return sum;
}

Matrix AffineAngleFamily::matrix(double t) const
{
    const auto a = angles(t);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(a.size()));
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto d = static_cast<Eigen::Index>(j);
        m(d, d) = std::polar(1.0, a[j]);
    }
    return m;
}

AffineAngleFamily build_example_u()
{
    return AffineAngleFamily{{{-kTwoPi * 9.0 / 10.0, 0.0, 1}, {kTwoPi * 1.0 / 10.0, 0.0, 9}}};
}

void require_eps(double eps)
{
    CELEX_FAIL_IF(!std::isfinite(eps) || !(eps > 0.0) || eps > 0.01, ErrorCode::EpsOutOfRange,
                  "eps must lie in (0, 0.01], got " + std::to_string(eps));
}

AffineAngleFamily build_u_eps(double eps)
{
    require_eps(eps);
    return AffineAngleFamily{
        {{-kTwoPi * (9.0 / 10.0 - eps), 0.0, 1}, {kTwoPi * (1.0 / 10.0 - eps), 0.0, 9}}};
}

AffineAngleFamily near_2pi_family(int k)
{
    CELEX_FAIL_IF(k < 1 || k > 9, ErrorCode::InvalidArgument, "near_2pi_family: k must be in 1..9");
    const double big = pow10(k);
    return AffineAngleFamily{{{-kTwoPi * (big - 1.0) / big, 0.0, 1},
                              {kTwoPi / big, 0.0, static_cast<std::uint64_t>(big) - 1}}};
}

double upper_bound_single_exponential(const AffineAngleFamily &f)
{
    double bound = 0.0;
    for (const auto &term : f.terms) {
        bound = std::max({bound, std::abs(term.at(0.0)), std::abs(term.at(1.0))});
    }
    return bound;
}

SortedBranches sorted_branch_functions(const AffineAngleFamily &f, std::span<const double> t_grid)
{
    SortedBranches out;
    out.t_grid.assign(t_grid.begin(), t_grid.end());
    out.size = static_cast<std::size_t>(f.total_size());
    out.values.reserve(out.size * t_grid.size());
    for (const double t : t_grid) {
        for (const auto &[value, mult] : sorted_values(f, t)) {
            out.values.insert(out.values.end(), mult, value / kTwoPi);
        }
    }
    return out;
}

double order_statistic(const AffineAngleFamily &f, double t, std::uint64_t k)
{
    CELEX_FAIL_IF(k == 0 || k > f.total_size(), ErrorCode::InvalidArgument,
                  "order_statistic: rank out of range");
    std::uint64_t seen = 0;
    for (const auto &[value, mult] : sorted_values(f, t)) {
        seen += mult;
        if (seen >= k) {
            return value / kTwoPi;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

UnitaryHomotopy family_to_homotopy(const AffineAngleFamily &f, std::span<const double> offsets,
                                   std::vector<double> s_grid, std::vector<double> t_grid,
                                   FamilyOrdering ordering, std::span<const std::size_t> indices)
{
    const std::uint64_t total = f.total_size();
    CELEX_FAIL_IF(total == 0, ErrorCode::InvalidArgument, "family_to_homotopy: empty family");
    CELEX_FAIL_IF(!offsets.empty() && offsets.size() != total, ErrorCode::SizeMismatch,
                  "family_to_homotopy: need one offset per diagonal entry");
    for (std::size_t k = 1; k < offsets.size(); ++k) {
        CELEX_FAIL_IF(!(offsets[k] > offsets[k - 1]), ErrorCode::InvalidArgument,
                      "family_to_homotopy: offsets must be strictly increasing");
    }
    std::vector<std::size_t> slots(indices.begin(), indices.end());
    if (slots.empty()) {
        CELEX_FAIL_IF(total > 512, ErrorCode::InvalidArgument,
                      "family_to_homotopy: family too large to materialize; pass indices");
        for (std::size_t k = 0; k < total; ++k) {
            slots.push_back(k);
        }
    }
    for (const auto k : slots) {
        CELEX_FAIL_IF(k >= total, ErrorCode::InvalidArgument, "family_to_homotopy: index out of range");
    }

    // Angle of each selected entry, t-major.
    const std::size_t m = slots.size();
    std::vector<double> table(m * t_grid.size());
    for (std::size_t l = 0; l < t_grid.size(); ++l) {
        const double t = t_grid[l];
        if (ordering == FamilyOrdering::sorted) {
            for (std::size_t j = 0; j < m; ++j) {
                table[l * m + j] = kTwoPi * order_statistic(f, t, slots[j] + 1);
            }
        } else {
            const auto a = f.angles(t);
            for (std::size_t j = 0; j < m; ++j) {
                table[l * m + j] = a[slots[j]];
            }
        }
        if (!offsets.empty()) {
            for (std::size_t j = 0; j < m; ++j) {
                table[l * m + j] += offsets[slots[j]];
            }
            std::vector<double> row(table.begin() + static_cast<long>(l * m),
                                    table.begin() + static_cast<long>((l + 1) * m));
            CELEX_FAIL_IF(!(min_pairwise_chord(row) > kSimpleGapTolerance),
                          ErrorCode::OffsetCollision,
                          "offset angle functions meet at t = " + std::to_string(t));
        }
    }

    UnitaryHomotopy h;
    h.n = static_cast<Eigen::Index>(m);
    h.s_grid = std::move(s_grid);
    h.t_grid = std::move(t_grid);
    h.matrices.reserve(h.s_grid.size() * h.t_grid.size());
    for (const double s : h.s_grid) {
        for (std::size_t l = 0; l < h.t_grid.size(); ++l) {
            Matrix d = Matrix::Zero(h.n, h.n);
            for (std::size_t j = 0; j < m; ++j) {
                const auto e = static_cast<Eigen::Index>(j);
                d(e, e) = std::polar(1.0, s * table[l * m + j]);
            }
            h.matrices.push_back(std::move(d));
        }
    }
    h.validate();
    return h;
}

} // namespace celex
