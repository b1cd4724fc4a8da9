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
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace celex {

using Matrix = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

/// Allowed ‖U*U − I‖ for an n×n matrix to count as unitary.
[[nodiscard]] inline double unitary_tolerance(Eigen::Index n) { return static_cast<double>(n) * 1e-10; }

/// Eigenvalues are projected to the circle; a modulus further than this from 1 is rejected.
inline constexpr double kModulusTolerance = 1e-8;

/// An eigenvalue this close to −1 has no principal logarithm.
inline constexpr double kBranchCutTolerance = 1e-6;

[[nodiscard]] double unitarity_residual(const Matrix &u);
void require_unitary(const Matrix &u, const char *where);

/// Largest singular value.
[[nodiscard]] double operator_norm(const Matrix &a);

/// Eigenvalue angles in (−π, π] of a unitary, via complex Schur. Throws
/// NotUnitary if an eigenvalue modulus is off the circle.
[[nodiscard]] std::vector<double> spectrum(const Matrix &u);

/// Same as spectrum() but skips the unitarity precondition check.
[[nodiscard]] std::vector<double> spectrum_unchecked(const Matrix &u);

/// Smallest pairwise chord between the given eigenvalue angles; +∞ for fewer
/// than two.
[[nodiscard]] double min_pairwise_chord(const std::vector<double> &angles);

/// Spectral decomposition U = Z diag(e^{iθ}) Z* with θ in (−π, π].
struct UnitaryEigen {
    Matrix vectors;
    Eigen::VectorXd angles;

    [[nodiscard]] Matrix hermitian_log() const;
    /// Z diag(e^{iσθ}) Z*.
    [[nodiscard]] Matrix power(double sigma) const;
};

[[nodiscard]] UnitaryEigen unitary_eigen(const Matrix &u);

/// Principal Hermitian logarithm: exp(iH) = U, ‖H‖ ≤ π. Throws BranchCut when
/// an eigenvalue is within kBranchCutTolerance of −1.
[[nodiscard]] Matrix unitary_log(const Matrix &u);

/// exp(iH) for Hermitian H.
[[nodiscard]] Matrix exp_i(const Matrix &h);

/// The one-parameter geodesic σ ↦ G0 exp(iσH), H = log(G0*G1).
class Geodesic {
  public:
    /// Throws TooFarApart unless ‖G0*G1 − I‖ < 1.
    Geodesic(const Matrix &g0, const Matrix &g1);

    [[nodiscard]] Matrix at(double sigma) const;
    /// ‖H‖, the length of the segment.
    [[nodiscard]] double length() const;

  private:
    Matrix start_;
    UnitaryEigen step_;
};

[[nodiscard]] Matrix geodesic_interpolate(const Matrix &g0, const Matrix &g1, double s);

/// Unitary factor of the polar decomposition.
[[nodiscard]] Matrix polar_unitary(const Matrix &a);

[[nodiscard]] Matrix random_unitary(Eigen::Index n, Rng &rng);

/// Random Hermitian matrix scaled to operator norm 1.
[[nodiscard]] Matrix random_hermitian(Eigen::Index n, Rng &rng);

[[nodiscard]] bool is_diagonal(const Matrix &a);

} // namespace celex
