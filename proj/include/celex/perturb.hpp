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

#include <cstdint>
#include <optional>
#include <vector>

#include "celex/homotopy.hpp"

namespace celex {

/// Spectra whose smallest pairwise chord is at or below this are treated as
/// repeated.
inline constexpr double kSimpleGapTolerance = 1e-9;

/// Strictly increasing offsets in (−half_width, half_width) with the entry at
/// `pinned` equal to 0, equally spaced on each side of it.
[[nodiscard]] std::vector<double> offset_schedule(std::size_t count, std::size_t pinned,
                                                  double half_width);

struct PerturbOptions {
    std::uint64_t seed = 0;
    /// Diagonal slot whose angle is left unchanged by the structured offsets.
    std::size_t target_slot = 0;
    int max_retries = 16;
    /// Weight of the random off-diagonal part mixed into structured offsets
    /// once pure offsets fail.
    double coupling = 0.3;
};

struct PerturbReport {
    UnitaryHomotopy homotopy;
    bool unchanged = false;     ///< input was already simple everywhere
    bool structured = false;    ///< pure diagonal offsets succeeded
    bool pinned_endpoint = false;
    int attempts = 0;
    double magnitude = 0.0;     ///< generator scale actually used
    double sup_change = 0.0;    ///< sup over the grid of ‖G − F‖
    double length_change = 0.0; ///< |homotopy_length(G) − homotopy_length(F)|
    double min_gap = 0.0;       ///< smallest pairwise eigenvalue chord on the grid
};

/// Minimum over grid nodes of the smallest pairwise eigenvalue chord.
[[nodiscard]] double min_spectral_gap(const UnitaryHomotopy &f);

/// Returns G with simple spectrum at every grid node, ‖G − F‖ ≤ delta and
/// |length(G) − length(F)| ≤ delta. G_s(t) = F_s(t) V_s with V_s near 1:
/// structured diagonal offsets for diagonal input, otherwise the polar
/// projection of 1 + i w(s) δ K for a seeded random Hermitian K. When every
/// s = 1 sample is already simple, w(1) = 0 and that row is copied exactly.
/// Throws PerturbationFailed after options.max_retries attempts.
[[nodiscard]] PerturbReport perturb_to_simple_spectrum(const UnitaryHomotopy &f, double delta,
                                                       const PerturbOptions &options = {});

} // namespace celex
