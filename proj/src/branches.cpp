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

#include "celex/branches.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "celex/error.hpp"
#include "celex/multiset.hpp"
#include "celex/parallel.hpp"

namespace celex {

namespace {

using Axis = AmbiguousMatchingError::Axis;

/// Matches the branches across one step whose matrices differ by at most
/// `distance` in norm. Every intermediate spectrum on the geodesic lies within
/// arc radius r of the previous one, so each connected component of the
/// r-neighbourhood of the previous spectrum keeps its eigenvalue count, and
/// inside a component the sorted order is a continuous labelling. With
/// singleton components this is nearest-neighbour matching below half the gap.
std::optional<std::vector<double>> component_match(const std::vector<double> &prev,
                                                   const std::vector<double> &next,
                                                   double distance)
{
    const std::size_t k = prev.size();
    if (next.size() != k || !(distance < 2.0)) {
        return std::nullopt;
    }
    const double r = arc_of_chord(distance) + 1e-12;

    std::vector<double> wrapped(k);
    for (std::size_t j = 0; j < k; ++j) {
        wrapped[j] = wrap(prev[j]);
    }
    std::vector<std::size_t> order(k);
    for (std::size_t j = 0; j < k; ++j) {
        order[j] = j;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return wrapped[a] < wrapped[b] || (wrapped[a] == wrapped[b] && a < b);
    });

    // Cut the circle in the middle of the widest empty arc.
    double widest = -1.0;
    double cut = 0.0;
    for (std::size_t q = 0; q < k; ++q) {
        const double lo = wrapped[order[q]];
        const double hi = q + 1 < k ? wrapped[order[q + 1]] : wrapped[order[0]] + kTwoPi;
        if (hi - lo > widest) {
            widest = hi - lo;
            cut = lo + 0.5 * (hi - lo);
        }
    }
    if (!(widest > 2.0 * r)) {
        return std::nullopt;
    }
    auto unroll = [cut](double a) {
        double x = std::fmod(a - cut, kTwoPi);
        if (x < 0.0) {
            x += kTwoPi;
        }
        return x;
    };

    std::vector<std::pair<double, std::size_t>> from(k);
    for (std::size_t j = 0; j < k; ++j) {
        from[j] = {unroll(wrapped[j]), j};
    }
    std::sort(from.begin(), from.end());
    std::vector<double> to(k);
    for (std::size_t q = 0; q < k; ++q) {
        to[q] = unroll(next[q]);
    }
    std::sort(to.begin(), to.end());

    // Components are maximal runs of previous points closer than 2r.
    std::vector<double> out(k);
    std::size_t first = 0;
    std::size_t taken = 0;
    while (first < k) {
        std::size_t last = first;
        while (last + 1 < k && from[last + 1].first - from[last].first <= 2.0 * r) {
            ++last;
        }
        const double lo = from[first].first - r;
        const double hi = from[last].first + r;
        std::size_t count = 0;
        while (taken + count < k && to[taken + count] <= hi) {
            if (to[taken + count] < lo) {
                return std::nullopt;
            }
            ++count;
        }
        if (count != last - first + 1) {
            return std::nullopt;
        }
        for (std::size_t q = 0; q < count; ++q) {
            const auto [x, j] = from[first + q];
            const double move = to[taken + q] - x;
            if (!(std::abs(move) <= r)) {
                return std::nullopt;
            }
            out[j] = prev[j] + move;
        }
        taken += count;
        first = last + 1;
    }
    return out;
}

struct StepStats {
    std::size_t substeps = 0;
    int depth = 0;
};

class SegmentMatcher {
  public:
    SegmentMatcher(const Matrix &a, const Matrix &b, int max_depth)
        : a_(a), b_(b), max_depth_(max_depth)
    {
    }

    /// Lifts `prev` (values at a) to b, whose spectrum is `next`.
    std::optional<std::vector<double>> run(const std::vector<double> &prev,
                                           const std::vector<double> &next, StepStats &stats)
    {
        return interval(prev, a_, 0.0, b_, 1.0, next, 0, stats);
    }

  private:
    std::optional<std::vector<double>> interval(const std::vector<double> &prev, const Matrix &lo_m,
                                                double lo, const Matrix &hi_m, double hi,
                                                const std::vector<double> &next, int depth,
                                                StepStats &stats)
    {
        // Frobenius norm bounds the operator norm from above.
        if (auto direct = component_match(prev, next, (hi_m - lo_m).norm())) {
            stats.depth = std::max(stats.depth, depth);
            return direct;
        }
        if (depth >= max_depth_) {
            return std::nullopt;
        }
        if (!geodesic_) {
            geodesic_.emplace(a_, b_);
        }
        const double mid = 0.5 * (lo + hi);
        const Matrix mid_m = geodesic_->at(mid);
        const auto mid_spectrum = spectrum_unchecked(mid_m);
        ++stats.substeps;
        auto left = interval(prev, lo_m, lo, mid_m, mid, mid_spectrum, depth + 1, stats);
        if (!left) {
            return std::nullopt;
        }
        return interval(*left, mid_m, mid, hi_m, hi, next, depth + 1, stats);
    }

    const Matrix &a_;
    const Matrix &b_;
    int max_depth_;
    std::optional<Geodesic> geodesic_;
};

[[noreturn]] void ambiguous(Axis axis, std::size_t i, std::size_t l, const std::string &why)
{
    throw AmbiguousMatchingError(axis, i, l,
                                 "cannot match eigenvalues " + why + " at node (s index " +
                                     std::to_string(i) + ", t index " + std::to_string(l) +
                                     "); refine the grid");
}

} // namespace

BranchSet track_branches(const UnitaryHomotopy &f, const TrackOptions &options)
{
    CELEX_FAIL_IF(f.matrices.empty() || f.matrices.size() != f.rows() * f.cols(),
                  ErrorCode::InvalidArgument, "track_branches: malformed homotopy");
    const std::size_t ns = f.rows();
    const std::size_t nt = f.cols();
    const auto k = static_cast<std::size_t>(f.n);

    std::vector<std::vector<double>> spectra(ns * nt);
    parallel_for(nt, options.threads, [&](std::size_t l) {
        for (std::size_t i = 0; i < ns; ++i) {
            spectra[i * nt + l] = spectrum_unchecked(f.at(i, l));
        }
    });

    BranchSet b;
    b.k = k;
    b.s_grid = f.s_grid;
    b.t_grid = f.t_grid;
    b.lifts.assign(ns * nt * k, 0.0);
    b.gap = std::numeric_limits<double>::infinity();
    for (std::size_t node = 0; node < spectra.size(); ++node) {
        const double g = min_pairwise_chord(spectra[node]);
        if (!(g > 0.0)) {
            ambiguous(Axis::s, node / nt, node % nt, "(repeated eigenvalue)");
        }
        b.gap = std::min(b.gap, g);
    }

    auto store = [&](std::size_t i, std::size_t l, const std::vector<double> &v) {
        std::copy(v.begin(), v.end(), b.lifts.begin() + static_cast<long>((i * nt + l) * k));
    };
    auto load = [&](std::size_t i, std::size_t l) {
        const auto first = b.lifts.begin() + static_cast<long>((i * nt + l) * k);
        return std::vector<double>(first, first + static_cast<long>(k));
    };

    // Base node: labels follow ascending angle in (−π, π].
    std::vector<double> base = spectra[0];
    std::sort(base.begin(), base.end());
    bool identity_row = true;
    for (std::size_t l = 0; l < nt && identity_row; ++l) {
        identity_row = (f.at(0, l) - Matrix::Identity(f.n, f.n)).cwiseAbs().maxCoeff() == 0.0;
    }
    if (identity_row) {
        std::fill(base.begin(), base.end(), 0.0);
    }
    store(0, 0, base);

    StepStats total;
    for (std::size_t l = 1; l < nt; ++l) {
        SegmentMatcher matcher(f.at(0, l - 1), f.at(0, l), options.max_depth);
        auto next = matcher.run(load(0, l - 1), spectra[l], total);
        if (!next) {
            ambiguous(Axis::t, 0, l, "along t on the base row");
        }
        store(0, l, *next);
    }

    std::vector<StepStats> column_stats(nt);
    parallel_for(nt, options.threads, [&](std::size_t l) {
        std::vector<double> current = load(0, l);
        for (std::size_t i = 1; i < ns; ++i) {
            SegmentMatcher matcher(f.at(i - 1, l), f.at(i, l), options.max_depth);
            auto next = matcher.run(current, spectra[i * nt + l], column_stats[l]);
            if (!next) {
                ambiguous(Axis::s, i, l, "along s");
            }
            current = std::move(*next);
            store(i, l, current);
        }
    });

    std::vector<StepStats> row_stats(ns);
    if (options.check_rows) {
        parallel_for(ns, options.threads, [&](std::size_t i) {
            if (i == 0) {
                return;
            }
            for (std::size_t l = 1; l < nt; ++l) {
                SegmentMatcher matcher(f.at(i, l - 1), f.at(i, l), options.max_depth);
                auto next = matcher.run(load(i, l - 1), spectra[i * nt + l], row_stats[i]);
                if (!next) {
                    ambiguous(Axis::t, i, l, "along t");
                }
                const auto expected = load(i, l);
                for (std::size_t j = 0; j < k; ++j) {
                    if (std::abs((*next)[j] - expected[j]) > 1e-7) {
                        ambiguous(Axis::t, i, l, "(column lifts disagree along t)");
                    }
                }
            }
        });
    }

    for (const auto &group : {column_stats, row_stats}) {
        for (const auto &st : group) {
            total.substeps += st.substeps;
            total.depth = std::max(total.depth, st.depth);
        }
    }
    b.substeps = total.substeps;
    b.depth_used = total.depth;
    return b;
}

double branch_displacement_bound(const BranchSet &b, std::size_t j)
{
    CELEX_FAIL_IF(j >= b.k, ErrorCode::InvalidArgument, "branch index out of range");
    const std::size_t last = b.s_grid.size() - 1;
    double d = 0.0;
    for (std::size_t l = 0; l < b.t_grid.size(); ++l) {
        d = std::max(d, std::abs(b.lift(j, last, l) - b.lift(j, 0, l)));
    }
    return d;
}

double branch_length(const BranchSet &b, std::size_t j)
{
    CELEX_FAIL_IF(j >= b.k, ErrorCode::InvalidArgument, "branch index out of range");
    double total = 0.0;
    for (std::size_t i = 1; i < b.s_grid.size(); ++i) {
        double step = 0.0;
        for (std::size_t l = 0; l < b.t_grid.size(); ++l) {
            step = std::max(step, chord(b.lift(j, i, l), b.lift(j, i - 1, l)));
        }
        total += step;
    }
    return total;
}

double branch_consistency(const BranchSet &b, const UnitaryHomotopy &f)
{
    CELEX_FAIL_IF(b.s_grid.size() != f.rows() || b.t_grid.size() != f.cols() ||
                      b.k != static_cast<std::size_t>(f.n),
                  ErrorCode::DimensionMismatch, "branch set does not belong to this homotopy");
    double worst = 0.0;
    std::vector<double> values(b.k);
    for (std::size_t i = 0; i < f.rows(); ++i) {
        for (std::size_t l = 0; l < f.cols(); ++l) {
            for (std::size_t j = 0; j < b.k; ++j) {
                values[j] = b.lift(j, i, l);
            }
            worst = std::max(worst, bottleneck_distance(values, spectrum_unchecked(f.at(i, l)),
                                                        Metric::chordal));
        }
    }
    return worst;
}

double lift_agreement(const BranchSet &a, const BranchSet &b)
{
    CELEX_FAIL_IF(a.k != b.k, ErrorCode::DimensionMismatch, "branch counts differ");
    auto index_map = [](const std::vector<double> &from, const std::vector<double> &to) {
        std::vector<std::pair<std::size_t, std::size_t>> shared;
        for (std::size_t x = 0; x < from.size(); ++x) {
            const auto it = std::find(to.begin(), to.end(), from[x]);
            if (it != to.end()) {
                shared.emplace_back(x, static_cast<std::size_t>(it - to.begin()));
            }
        }
        return shared;
    };
    const auto rows = index_map(a.s_grid, b.s_grid);
    const auto cols = index_map(a.t_grid, b.t_grid);
    CELEX_FAIL_IF(rows.empty() || cols.empty(), ErrorCode::InvalidArgument,
                  "branch sets share no grid nodes");
    double worst = 0.0;
    for (const auto &[ia, ib] : rows) {
        for (const auto &[la, lb] : cols) {
            for (std::size_t j = 0; j < a.k; ++j) {
                worst = std::max(worst, std::abs(a.lift(j, ia, la) - b.lift(j, ib, lb)));
            }
        }
    }
    return worst;
}

void write_branch_csv(const BranchSet &b, std::ostream &out)
{
    out << "j,s,t,phi\n";
    char buffer[128];
    for (std::size_t j = 0; j < b.k; ++j) {
        for (std::size_t i = 0; i < b.s_grid.size(); ++i) {
            for (std::size_t l = 0; l < b.t_grid.size(); ++l) {
                std::snprintf(buffer, sizeof buffer, "%zu,%.17g,%.17g,%.17g\n", j, b.s_grid[i],
                              b.t_grid[l], b.lift(j, i, l));
                out << buffer;
            }
        }
    }
}

} // namespace celex
