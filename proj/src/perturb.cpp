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

#include "celex/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "celex/error.hpp"

namespace celex {

std::vector<double> offset_schedule(std::size_t count, std::size_t pinned, double half_width)
{
    CELEX_FAIL_IF(count == 0 || pinned >= count, ErrorCode::InvalidArgument,
                  "offset_schedule: pinned slot out of range");
    CELEX_FAIL_IF(!(half_width > 0.0), ErrorCode::InvalidArgument,
                  "offset_schedule: half width must be positive");
    std::vector<double> offsets(count, 0.0);
    const double below = static_cast<double>(pinned);
    const double above = static_cast<double>(count - 1 - pinned);
    for (std::size_t k = 0; k < count; ++k) {
        if (k < pinned) {
            offsets[k] = -half_width * static_cast<double>(pinned - k) / (below + 1.0);
        } else if (k > pinned) {
            offsets[k] = half_width * static_cast<double>(k - pinned) / (above + 1.0);
        }
    }
    return offsets;
}

double min_spectral_gap(const UnitaryHomotopy &f)
{
    double gap = std::numeric_limits<double>::infinity();
    for (const auto &m : f.matrices) {
        gap = std::min(gap, min_pairwise_chord(spectrum_unchecked(m)));
    }
    return gap;
}

namespace {

bool row_is_simple(const UnitaryHomotopy &f, std::size_t i)
{
    for (std::size_t l = 0; l < f.cols(); ++l) {
        if (!(min_pairwise_chord(spectrum_unchecked(f.at(i, l))) > kSimpleGapTolerance)) {
            return false;
        }
    }
    return true;
}

bool all_diagonal(const UnitaryHomotopy &f)
{
    return std::all_of(f.matrices.begin(), f.matrices.end(),
                       [](const Matrix &m) { return is_diagonal(m); });
}

/// Right-multiplies every row by V(w(s)) where V(w) = exp(i w δ P) (`use_polar`
/// false, P diagonal) or polar(1 + i w δ P).
UnitaryHomotopy apply_generator(const UnitaryHomotopy &f, const Matrix &generator, double scale,
                                bool use_polar, bool pin_end)
{
    UnitaryHomotopy g = f;
    const double s0 = f.s_grid.front();
    const double span = f.s_grid.back() - s0;
    const Matrix identity = Matrix::Identity(f.n, f.n);
    for (std::size_t i = 0; i < f.rows(); ++i) {
        const double w = pin_end && span > 0.0 ? 1.0 - (f.s_grid[i] - s0) / span : 1.0;
        if (w == 0.0) {
            continue; // the end row is copied exactly
        }
        const Matrix v = use_polar ? polar_unitary(identity + std::complex<double>(0.0, w * scale) * generator)
                                   : exp_i(w * scale * generator);
        for (std::size_t l = 0; l < f.cols(); ++l) {
            g.at(i, l) = f.at(i, l) * v;
        }
    }
    return g;
}

/// For diagonal samples the diagonal entries are the continuous eigenvalue
/// branches along the geodesic between neighbours, so two branches collide
/// between nodes exactly when their relative angle passes through 0 mod 2π.
bool diagonal_branches_cross(const UnitaryHomotopy &g)
{
    const auto n = g.n;
    auto crosses = [n](const Matrix &p, const Matrix &q) {
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index k = j + 1; k < n; ++k) {
                const double rp = wrap(std::arg(p(j, j)) - std::arg(p(k, k)));
                const double rq = rp + wrap(std::arg(q(j, j)) - std::arg(q(k, k)) - rp);
                if (rp * rq <= 0.0) {
                    return true;
                }
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
            if ((l + 1 < g.cols() && crosses(g.at(i, l), g.at(i, l + 1))) ||
                (i + 1 < g.rows() && crosses(g.at(i, l), g.at(i + 1, l)))) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

PerturbReport perturb_to_simple_spectrum(const UnitaryHomotopy &f, double delta,
                                         const PerturbOptions &options)
{
    CELEX_FAIL_IF(!(delta > 0.0) || !std::isfinite(delta), ErrorCode::InvalidArgument,
                  "perturb_to_simple_spectrum: delta must be positive");
    CELEX_FAIL_IF(f.matrices.empty(), ErrorCode::InvalidArgument,
                  "perturb_to_simple_spectrum: empty homotopy");

    const double base_gap = min_spectral_gap(f);
    if (base_gap > kSimpleGapTolerance) {
        return {f, true, false, false, 0, 0.0, 0.0, 0.0, base_gap};
    }

    const bool pin_end = f.rows() > 1 && row_is_simple(f, f.rows() - 1);
    const bool diagonal = all_diagonal(f);
    const double base_length = homotopy_length(f);
    const auto n = static_cast<std::size_t>(f.n);
    const std::size_t target = std::min(options.target_slot, n - 1);

    Matrix structured = Matrix::Zero(f.n, f.n);
    if (diagonal) {
        const auto offsets = offset_schedule(n, target, 1.0);
        for (std::size_t k = 0; k < n; ++k) {
            structured(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = offsets[k];
        }
    }

    double smallest_gap = 0.0;
    Rng rng(options.seed);
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        Matrix generator;
        bool use_polar = true;
        // Attempt 0 is the pure offset device for diagonal families; later
        // attempts add seeded random coupling at geometrically shrinking scale.
        double scale = delta * std::pow(0.8, std::max(0, attempt - (diagonal ? 1 : 0)));
        if (diagonal && attempt == 0) {
            generator = structured;
            use_polar = false;
        } else {
            const Matrix k = random_hermitian(f.n, rng);
            generator = diagonal ? Matrix(structured + options.coupling * k) : k;
            generator /= operator_norm(generator);
        }
        UnitaryHomotopy g = apply_generator(f, generator, scale, use_polar, pin_end);
        if (!use_polar && diagonal_branches_cross(g)) {
            continue;
        }
        const double gap = min_spectral_gap(g);
        smallest_gap = std::max(smallest_gap, gap);
        if (!(gap > kSimpleGapTolerance)) {
            continue;
        }
        const double sup_change = sup_distance(f, g);
        const double length_change = std::abs(homotopy_length(g) - base_length);
        if (sup_change > delta || length_change > delta) {
            continue;
        }
        return {std::move(g), false,     diagonal && attempt == 0, pin_end, attempt + 1,
                scale,        sup_change, length_change,           gap};
    }
    throw Error(ErrorCode::PerturbationFailed,
                "no simple-spectrum perturbation found; best gap " + std::to_string(smallest_gap));
}

} // namespace celex
