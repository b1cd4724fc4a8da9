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

#include "celex/goodearl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "celex/error.hpp"

namespace celex {

namespace {

std::uint64_t pow10u(int k)
{
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        v *= 10;
    }
    return v;
}

/// Appends `term`, merging with an identical earlier term.
class TermAccumulator {
  public:
    void add(const AngleTerm &term)
    {
        const auto key = std::make_pair(term.slope, term.intercept);
        const auto it = index_.find(key);
        if (it == index_.end()) {
            index_.emplace(key, out_.terms.size());
            out_.terms.push_back(term);
        } else {
            out_.terms[it->second].mult += term.mult;
        }
    }
    AffineAngleFamily take() { return std::move(out_); }

  private:
    AffineAngleFamily out_;
    std::map<std::pair<double, double>, std::size_t> index_;
};

} // namespace

GoodearlStage GoodearlStage::with_default_points(std::vector<int> levels, std::optional<double> eps)
{
    GoodearlStage stage;
    const double n = static_cast<double>(levels.size() + 1);
    for (std::size_t i = 1; i <= levels.size(); ++i) {
        stage.points.push_back(static_cast<double>(i) / (n + 1.0));
    }
    stage.levels = std::move(levels);
    stage.eps = eps;
    return stage;
}

std::uint64_t GoodearlStage::alpha() const
{
    std::uint64_t a = 1;
    for (const int k : levels) {
        a *= pow10u(k) - 1;
    }
    return a;
}

std::uint64_t GoodearlStage::size() const
{
    std::uint64_t l = 10;
    for (const int k : levels) {
        l *= pow10u(k);
    }
    return l;
}

double GoodearlStage::admissibility() const
{
    double r = 1.0;
    for (const int k : levels) {
        const double big = std::pow(10.0, k);
        r *= (big - 1.0) / big;
    }
    return r;
}

void GoodearlStage::validate() const
{
    CELEX_FAIL_IF(points.size() != levels.size(), ErrorCode::InvalidArgument,
                  "stage needs one evaluation point per level");
    int digits = 1;
    for (const int k : levels) {
        CELEX_FAIL_IF(k < 1, ErrorCode::InvalidArgument, "levels must be positive");
        digits += k;
    }
    CELEX_FAIL_IF(digits > 18, ErrorCode::InvalidArgument, "stage size overflows 64 bits");
    for (std::size_t i = 0; i < points.size(); ++i) {
        CELEX_FAIL_IF(!(points[i] >= 0.0 && points[i] <= 1.0), ErrorCode::InvalidArgument,
                      "evaluation points must lie in [0, 1]");
        for (std::size_t j = 0; j < i; ++j) {
            CELEX_FAIL_IF(points[i] == points[j], ErrorCode::InvalidArgument,
                          "evaluation points must be distinct");
        }
    }
    if (eps) {
        require_eps(*eps);
    }
}

AffineAngleFamily goodearl_image_unchecked(const AffineAngleFamily &f, const GoodearlStage &stage)
{
    stage.validate();
    AffineAngleFamily current = f;
    for (std::size_t i = 0; i < stage.levels.size(); ++i) {
        const std::uint64_t copies = pow10u(stage.levels[i]) - 1;
        const double x = stage.points[i];
        TermAccumulator acc;
        for (const auto &term : current.terms) {
            acc.add({term.slope, term.intercept, term.mult * copies});
        }
        for (const auto &term : current.terms) {
            acc.add({0.0, term.at(x), term.mult});
        }
        current = acc.take();
    }
    return current;
}

AffineAngleFamily goodearl_image(const AffineAngleFamily &f, const GoodearlStage &stage)
{
    CELEX_FAIL_IF(!stage.admissible(), ErrorCode::InadmissibleStage,
                  "stage is not admissible: product " + std::to_string(stage.admissibility()) +
                      " <= 11/12");
    return goodearl_image_unchecked(f, stage);
}

MiddleBranchReport check_middle_branch(const AffineAngleFamily &f, const GoodearlStage &stage,
                                       double eps, std::span<const double> t_grid)
{
    MiddleBranchReport report;
    report.alpha = stage.alpha();
    report.beta = stage.beta();
    report.gamma = stage.gamma();
    if (f.total_size() != stage.size()) {
        report.witnesses.push_back({0.0, 0, "family size does not match the stage"});
        return report;
    }
    if (report.gamma >= report.alpha) {
        report.witnesses.push_back({0.0, report.gamma, "gamma >= alpha: no middle branch"});
        return report;
    }
    const AngleTerm fast{-kTwoPi * (9.0 / 10.0 - eps), 0.0, 1};
    for (const double t : t_grid) {
        const double target = fast.at(t) / kTwoPi;
        std::uint64_t below = 0;
        std::uint64_t equal = 0;
        for (const auto &term : f.terms) {
            const double v = term.at(t) / kTwoPi;
            if (v < target) {
                below += term.mult;
            } else if (v == target) {
                equal += term.mult;
            }
        }
        const std::uint64_t above = f.total_size() - below - equal;
        report.max_below = std::max(report.max_below, below);
        report.max_above = std::max(report.max_above, above);
        ++report.points_checked;
        if (below > report.gamma) {
            report.witnesses.push_back({t, report.gamma + 1, "value below the target at rank"});
        } else if (below + equal < report.alpha) {
            report.witnesses.push_back({t, below + equal + 1, "value above the target at rank"});
        }
    }
    report.pass = report.witnesses.empty() && report.max_above <= report.gamma + report.beta;
    return report;
}

} // namespace celex
