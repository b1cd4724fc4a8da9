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

#include "celex/multiset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "celex/angle.hpp"
#include "celex/error.hpp"
#include "celex/unitary.hpp"

namespace celex {

double point_distance(double a, double b, Metric metric)
{
    switch (metric) {
    case Metric::chordal: return chord(a, b);
    case Metric::arc: return arc_distance(a, b);
    case Metric::absolute: return std::abs(a - b);
    }
    return 0.0;
}

namespace {

/// Kuhn's augmenting-path matching restricted to edges with cost ≤ threshold.
class ThresholdMatcher {
  public:
    ThresholdMatcher(const std::vector<double> &cost, std::size_t k) : cost_(cost), k_(k) {}

    bool perfect(double threshold)
    {
        threshold_ = threshold;
        match_.assign(k_, npos);
        for (std::size_t row = 0; row < k_; ++row) {
            seen_.assign(k_, false);
            if (!augment(row)) {
                return false;
            }
        }
        return true;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t row)
    {
        for (std::size_t col = 0; col < k_; ++col) {
            if (seen_[col] || cost_[row * k_ + col] > threshold_) {
                continue;
            }
            seen_[col] = true;
            if (match_[col] == npos || augment(match_[col])) {
                match_[col] = row;
                return true;
            }
        }
        return false;
    }

    const std::vector<double> &cost_;
    std::size_t k_;
    double threshold_ = 0.0;
    std::vector<std::size_t> match_;
    std::vector<bool> seen_;
};

} // namespace

double bottleneck_distance(std::span<const double> a, std::span<const double> b, Metric metric)
{
    CELEX_FAIL_IF(a.size() != b.size(), ErrorCode::SizeMismatch,
                  "bottleneck_distance: multisets differ in size");
    CELEX_FAIL_IF(a.empty(), ErrorCode::InvalidArgument, "bottleneck_distance: empty multisets");
    const std::size_t k = a.size();
    std::vector<double> cost(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            cost[i * k + j] = point_distance(a[i], b[j], metric);
        }
    }
    std::vector<double> candidates = cost;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Every row needs some edge, so the answer is at least the largest row minimum.
    double floor_value = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        floor_value = std::max(floor_value, *std::min_element(cost.begin() + static_cast<long>(i * k),
                                                              cost.begin() + static_cast<long>((i + 1) * k)));
    }
    auto lo = static_cast<std::size_t>(
        std::lower_bound(candidates.begin(), candidates.end(), floor_value) - candidates.begin());
    std::size_t hi = candidates.size() - 1;
    ThresholdMatcher matcher(cost, k);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.perfect(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

double bottleneck_distance(const RealMultiset &a, const RealMultiset &b)
{
    return bottleneck_distance(a.values, b.values, Metric::absolute);
}

double bottleneck_distance(const CircleMultiset &a, const CircleMultiset &b, Metric metric)
{
    CELEX_FAIL_IF(metric == Metric::absolute, ErrorCode::InvalidArgument,
                  "circle multisets use the chordal or arc metric");
    return bottleneck_distance(a.angles, b.angles, metric);
}

std::vector<double> sort_lift_theta(const RealMultiset &a)
{
    std::vector<double> sorted = a.values;
    std::stable_sort(sorted.begin(), sorted.end());
    return sorted;
}

double d_max(std::span<const double> x, std::span<const double> y)
{
    CELEX_FAIL_IF(x.size() != y.size(), ErrorCode::SizeMismatch, "d_max: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        m = std::max(m, std::abs(x[i] - y[i]));
    }
    return m;
}

WeylGap weyl_gap(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v)
{
    CELEX_FAIL_IF(u.rows() != v.rows() || u.cols() != v.cols(), ErrorCode::DimensionMismatch,
                  "weyl_gap: dimension mismatch");
    const auto su = spectrum(u);
    const auto sv = spectrum(v);
    return {bottleneck_distance(su, sv, Metric::chordal), operator_norm(u - v)};
}

} // namespace celex
