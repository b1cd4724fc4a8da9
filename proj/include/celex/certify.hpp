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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "celex/branches.hpp"
#include "celex/family.hpp"
#include "celex/goodearl.hpp"
#include "celex/homotopy.hpp"

namespace celex {

inline constexpr int kCertificateSchemaVersion = 1;

struct SlackItem {
    std::string name;
    double value = 0.0;
};

struct GridSpec {
    std::size_t s_points = 400;
    std::size_t t_points = 400;
};

struct CelCertificate {
    std::string target;
    double lower_bound = 0.0;
    std::optional<double> upper_bound;
    std::vector<SlackItem> slack;
    std::vector<std::string> provenance;
    std::uint64_t seed = 0;
    GridSpec grid;

    // Diagnostics of the run that produced the bound.
    double displacement = 0.0;
    double homotopy_length = 0.0;
    double perturbed_length = 0.0;
    std::size_t branch = 0;
    std::size_t candidates = 0;
    double gap = 0.0;
    std::size_t substeps = 0;

    [[nodiscard]] double total_slack() const;
};

/// Which eigenvalue branch carries the winding: its expected terminal angle
/// function (radians) and the t-window on which it is isolated.
struct TargetSpec {
    std::string description;
    std::function<double(double)> terminal_angle;
    double window_lo = 0.05;
    double window_hi = 0.95;
    double tolerance = 0.02;
    /// Diagonal slot left unshifted by structured perturbation offsets.
    std::size_t slot = 0;
    std::optional<double> upper_bound;
};

struct CertifyOptions {
    double delta = 0.005;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    int max_depth = 20;
    /// Largest s-step norm allowed before tracking; the chord/arc factor uses
    /// the observed maximum.
    double max_step = 0.1;
    /// When set, receives the tracked branches of the perturbed homotopy.
    BranchSet *branches = nullptr;
};

/// sup_t ‖log u(t)‖ with the principal logarithm. Throws BranchCut when −1
/// is in a spectrum or the logarithm jumps between samples.
[[nodiscard]] double upper_bound_single_exponential(const UnitaryPath &path);

/// Lower bound for the length of F from the winding of one eigenvalue
/// branch: perturb to simple spectrum, track branches, identify the target
/// branch on the isolation window, then correct its displacement for the
/// chord/arc gap and the length change of the perturbation.
[[nodiscard]] CelCertificate certify_lower_bound(const UnitaryHomotopy &f, const TargetSpec &target,
                                                 const CertifyOptions &options = {});

enum class PropagationMode { norm_perturbation, conjugation };

/// norm_perturbation: bound − eps·π/2 (eps in [0, 1)); conjugation: bound.
[[nodiscard]] double propagate_cel_bounds(double bound, double eps, PropagationMode mode);

/// The geodesic homotopy exp(is·h(t)) of a family, on uniform grids.
[[nodiscard]] UnitaryHomotopy family_geodesic_homotopy(const AffineAngleFamily &f,
                                                       const GridSpec &grid,
                                                       std::span<const std::size_t> indices = {});

/// Target following term `term` of the family.
[[nodiscard]] TargetSpec family_target(const AffineAngleFamily &f, std::size_t term,
                                       std::size_t slot, std::string description);

/// Certificate for cel of the ten-dimensional unitary u, with its upper bound.
[[nodiscard]] CelCertificate example_u_certificate(const GridSpec &grid,
                                                   const CertifyOptions &options = {});

/// Certificate for the image of u_eps at a Goodearl stage.
[[nodiscard]] CelCertificate goodearl_certificate(const GoodearlStage &stage, double eps,
                                                  const GridSpec &grid,
                                                  const CertifyOptions &options = {});

/// The 10^k-dimensional family winding by 2π(10^k−1)/10^k and its
/// certificate. Families larger than 64 are certified on one copy of each
/// distinct entry.
[[nodiscard]] std::pair<AffineAngleFamily, CelCertificate>
near_2pi_example(int k, const GridSpec &grid, const CertifyOptions &options = {});

} // namespace celex
