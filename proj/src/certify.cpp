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

#include "celex/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "celex/branches.hpp"
#include "celex/error.hpp"
#include "celex/perturb.hpp"

namespace celex {

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void require_identity_start(const UnitaryHomotopy &f)
{
    const Matrix id = Matrix::Identity(f.n, f.n);
    for (std::size_t l = 0; l < f.cols(); ++l) {
        CELEX_FAIL_IF((f.at(0, l) - id).cwiseAbs().maxCoeff() > 1e-8, ErrorCode::InvalidArgument,
                      "homotopy must start at the identity");
    }
}

} // namespace

double CelCertificate::total_slack() const
{
    double total = 0.0;
    for (const auto &item : slack) {
        total += item.value;
    }
    return total;
}

double upper_bound_single_exponential(const UnitaryPath &path)
{
    CELEX_FAIL_IF(path.matrices.empty(), ErrorCode::InvalidArgument, "empty path");
    double bound = 0.0;
    Matrix previous;
    for (std::size_t l = 0; l < path.matrices.size(); ++l) {
        const Matrix h = unitary_log(path.matrices[l]);
        if (l > 0) {
            const double jump = operator_norm(h - previous);
            const double step = operator_norm(path.matrices[l] - path.matrices[l - 1]);
            CELEX_FAIL_IF(jump > 2.0 * arc_of_chord(std::min(step, 2.0)) + 1e-9,
                          ErrorCode::BranchCut,
                          "logarithm jumps between samples " + std::to_string(l - 1) + " and " +
                              std::to_string(l));
        }
        bound = std::max(bound, operator_norm(h));
        previous = h;
    }
    return bound;
}

CelCertificate certify_lower_bound(const UnitaryHomotopy &f, const TargetSpec &target,
                                   const CertifyOptions &options)
{
    f.validate();
    CELEX_FAIL_IF(!target.terminal_angle, ErrorCode::InvalidArgument, "target angle missing");
    CELEX_FAIL_IF(!(target.window_lo <= target.window_hi), ErrorCode::InvalidArgument,
                  "empty isolation window");
    require_identity_start(f);

    CelCertificate cert;
    cert.target = target.description;
    cert.seed = options.seed;
    cert.grid = {f.rows(), f.cols()};
    cert.upper_bound = target.upper_bound;
    cert.homotopy_length = homotopy_length(f);

    const UnitaryHomotopy refined = refine_s_until(f, options.max_step);
    PerturbOptions popts;
    popts.seed = options.seed;
    popts.target_slot = std::min<std::size_t>(target.slot, static_cast<std::size_t>(f.n) - 1);
    const PerturbReport perturbed = perturb_to_simple_spectrum(refined, options.delta, popts);
    const UnitaryHomotopy &g = perturbed.homotopy;
    cert.perturbed_length = homotopy_length(g);

    TrackOptions topts;
    topts.max_depth = options.max_depth;
    topts.threads = options.threads;
    const BranchSet branches = track_branches(g, topts);
    cert.gap = branches.gap;
    cert.substeps = branches.substeps;
    if (options.branches) {
        *options.branches = branches;
    }

    const std::size_t last = g.rows() - 1;
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < branches.k; ++j) {
        bool matches = true;
        bool sampled = false;
        for (std::size_t l = 0; l < g.cols() && matches; ++l) {
            const double t = g.t_grid[l];
            if (t < target.window_lo || t > target.window_hi) {
                continue;
            }
            sampled = true;
            matches = chord(branches.lift(j, last, l), target.terminal_angle(t)) <= target.tolerance;
        }
        if (matches && sampled) {
            candidates.push_back(j);
        }
    }
    CELEX_FAIL_IF(candidates.empty(), ErrorCode::BranchNotFound,
                  "no branch follows the target on [" + fmt(target.window_lo) + ", " +
                      fmt(target.window_hi) + "] within " + fmt(target.tolerance));
    cert.candidates = candidates.size();
    cert.displacement = std::numeric_limits<double>::infinity();
    for (const auto j : candidates) {
        const double d = branch_displacement_bound(branches, j);
        if (d < cert.displacement) {
            cert.displacement = d;
            cert.branch = j;
        }
    }

    const auto steps = homotopy_step_norms(g);
    const double max_step = steps.empty() ? 0.0 : *std::max_element(steps.begin(), steps.end());
    const double excess = chord_arc_excess(max_step);
    const double corrected = cert.displacement / (1.0 + excess);
    const double perturbation = std::max(0.0, cert.perturbed_length - cert.homotopy_length);
    cert.slack.push_back({"chord_arc", cert.displacement - corrected});
    cert.slack.push_back({"perturbation", perturbation});
    cert.lower_bound = std::max(0.0, corrected - perturbation);

    cert.provenance.push_back("spectrum made simple by a perturbation of size " +
                              fmt(perturbed.magnitude) + " (sup change " +
                              fmt(perturbed.sup_change) + ", " +
                              (perturbed.pinned_endpoint ? "endpoint pinned" : "endpoint moved") +
                              ")");
    cert.provenance.push_back("eigenvalue branches lifted by cluster-wise sorted matching (gap " +
                              fmt(branches.gap) + ", " + std::to_string(branches.substeps) +
                              " geodesic substeps)");
    cert.provenance.push_back("spectral bottleneck distance bounded by operator norm distance");
    cert.provenance.push_back("branch " + std::to_string(cert.branch) + " of " +
                              std::to_string(candidates.size()) +
                              " candidate(s) on the isolation window; displacement " +
                              fmt(cert.displacement));
    cert.provenance.push_back("path length bounded below by the winding of a branch lift");
    cert.provenance.push_back("arc length at most (1 + " + fmt(excess) +
                              ") times chord length for steps up to " + fmt(max_step));
    return cert;
}

double propagate_cel_bounds(double bound, double eps, PropagationMode mode)
{
    if (mode == PropagationMode::conjugation) {
        return bound;
    }
    CELEX_FAIL_IF(!(eps >= 0.0 && eps < 1.0), ErrorCode::EpsOutOfRange,
                  "norm perturbation needs eps in [0, 1)");
    return bound - eps * kPi / 2.0;
}

UnitaryHomotopy family_geodesic_homotopy(const AffineAngleFamily &f, const GridSpec &grid,
                                         std::span<const std::size_t> indices)
{
    return family_to_homotopy(f, {}, uniform_grid(grid.s_points), uniform_grid(grid.t_points),
                              FamilyOrdering::as_listed, indices);
}

TargetSpec family_target(const AffineAngleFamily &f, std::size_t term, std::size_t slot,
                         std::string description)
{
    CELEX_FAIL_IF(term >= f.terms.size(), ErrorCode::InvalidArgument, "term out of range");
    TargetSpec target;
    target.description = std::move(description);
    const AngleTerm chosen = f.terms[term];
    target.terminal_angle = [chosen](double t) { return chosen.at(t); };
    target.slot = slot;
    target.upper_bound = upper_bound_single_exponential(f);
    return target;
}

CelCertificate example_u_certificate(const GridSpec &grid, const CertifyOptions &options)
{
    const auto u = build_example_u();
    return certify_lower_bound(family_geodesic_homotopy(u, grid),
                               family_target(u, 0, 0, "ex310"), options);
}

CelCertificate goodearl_certificate(const GoodearlStage &stage, double eps, const GridSpec &grid,
                                    const CertifyOptions &options)
{
    require_eps(eps);
    const auto image = goodearl_image(build_u_eps(eps), stage);
    const auto t_grid = uniform_grid(grid.t_points);

    const auto middle = check_middle_branch(image, stage, eps, t_grid);
    if (!middle.pass) {
        const auto &w = middle.witnesses.front();
        throw Error(ErrorCode::BranchNotFound, "middle branch check failed at t = " + fmt(w.t) +
                                                   ", k = " + std::to_string(w.k) + ": " + w.reason);
    }

    const std::uint64_t size = stage.size();
    const std::uint64_t alpha = stage.alpha();
    const auto offsets = offset_schedule(size, alpha - 1, eps);
    const double offset_sup = std::max(std::abs(offsets.front()), std::abs(offsets.back()));
    const double offset_norm = 2.0 * std::sin(offset_sup / 2.0);

    // Sorted entries plus increasing offsets stay increasing; they stay
    // distinct on the circle while the total spread is below 2π.
    for (const double t : t_grid) {
        const double spread = kTwoPi * (order_statistic(image, t, size) - order_statistic(image, t, 1)) +
                              offsets.back() - offsets.front();
        CELEX_FAIL_IF(!(spread < kTwoPi), ErrorCode::OffsetCollision,
                      "offset entries wrap around at t = " + fmt(t));
    }

    const std::vector<std::size_t> block{0, static_cast<std::size_t>(alpha - 1),
                                         static_cast<std::size_t>(size - 1)};
    const auto homotopy = family_to_homotopy(image, offsets, uniform_grid(grid.s_points), t_grid,
                                             FamilyOrdering::sorted, block);

    TargetSpec target;
    std::ostringstream name;
    name << "goodearl levels [";
    for (std::size_t i = 0; i < stage.levels.size(); ++i) {
        name << (i ? "," : "") << stage.levels[i];
    }
    name << "] eps " << eps;
    target.description = name.str();
    const AngleTerm fast{-kTwoPi * (9.0 / 10.0 - eps), 0.0, 1};
    target.terminal_angle = [fast](double t) { return fast.at(t); };
    target.window_lo = eps;
    target.window_hi = 1.0 - eps;
    target.tolerance = eps / 4.0;
    target.slot = 1;
    target.upper_bound = upper_bound_single_exponential(image);

    CelCertificate cert = certify_lower_bound(homotopy, target, options);
    const double tracked = cert.lower_bound;
    double bound = propagate_cel_bounds(tracked, offset_norm, PropagationMode::norm_perturbation);
    bound = propagate_cel_bounds(bound, eps, PropagationMode::norm_perturbation);
    bound = propagate_cel_bounds(bound, eps, PropagationMode::conjugation);
    cert.slack.push_back({"offset_perturbation", kPi / 2.0 * offset_norm});
    cert.slack.push_back({"approximate_conjugacy", kPi / 2.0 * eps});
    cert.lower_bound = std::max(0.0, bound);

    cert.provenance.insert(cert.provenance.begin(),
                           "middle branch identity checked on " +
                               std::to_string(middle.points_checked) + " points (alpha " +
                               std::to_string(middle.alpha) + ", gamma " +
                               std::to_string(middle.gamma) + ")");
    cert.provenance.insert(cert.provenance.begin() + 1,
                           "homotopy restricted to sorted entries {1, alpha, L} of the offset "
                           "family; a block of a diagonal matrix has norm at most the whole");
    cert.provenance.push_back("offset family within " + fmt(offset_norm) +
                              " of the sorted family; |cel(a) - cel(b)| < eps*pi/2 for "
                              "||a - b|| < eps < 1 [cited, not proved here]");
    cert.provenance.push_back("sorted family approximately unitarily equivalent to the stage "
                              "image within eps; cel is conjugation invariant [cited, not proved "
                              "here]");
    return cert;
}

std::pair<AffineAngleFamily, CelCertificate> near_2pi_example(int k, const GridSpec &grid,
                                                              const CertifyOptions &options)
{
    auto family = near_2pi_family(k);
    std::vector<std::size_t> block;
    if (family.total_size() > 64) {
        block = {0, 1};
    }
    auto cert = certify_lower_bound(family_geodesic_homotopy(family, grid, block),
                                    family_target(family, 0, 0, "near2pi k=" + std::to_string(k)),
                                    options);
    if (!block.empty()) {
        cert.provenance.insert(cert.provenance.begin(),
                               "homotopy restricted to one copy of each distinct entry");
    }
    return {std::move(family), std::move(cert)};
}

} // namespace celex
