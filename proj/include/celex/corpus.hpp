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
#include <string>
#include <vector>

#include "celex/certify.hpp"
#include "celex/family.hpp"
#include "celex/homotopy.hpp"

namespace celex {

struct CorpusEntry {
    std::string name;
    UnitaryHomotopy homotopy;
};

/// Geodesic to f after a closed loop exp(i g(s) P), ‖P‖ = 1, of length
/// `loop_length` traversed on s ∈ [0, 1/2].
[[nodiscard]] UnitaryHomotopy detour_homotopy(const AffineAngleFamily &f, const Matrix &p,
                                              double loop_length, const GridSpec &grid);

/// Seeded homotopies from 1 to f: reparameterized geodesics, detours and
/// conjugations by unitaries that are trivial at both ends.
[[nodiscard]] std::vector<CorpusEntry> adversarial_corpus(const AffineAngleFamily &f,
                                                          std::size_t count, std::uint64_t seed,
                                                          const GridSpec &grid);

/// Seeded conjugated diagonal homotopies with repeated eigenvalues. Every
/// other entry has a simple spectrum along its whole s = 1 row.
[[nodiscard]] std::vector<CorpusEntry> collision_corpus(std::size_t count, std::uint64_t seed,
                                                        const GridSpec &grid);

} // namespace celex
