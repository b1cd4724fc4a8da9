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

#include "celex/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "celex/angle.hpp"
#include "celex/error.hpp"

namespace celex {

double unitarity_residual(const Matrix &u)
{
    const Matrix gram = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return operator_norm(gram);
}

void require_unitary(const Matrix &u, const char *where)
{
    CELEX_FAIL_IF(u.rows() != u.cols() || u.rows() == 0, ErrorCode::DimensionMismatch,
                  std::string(where) + ": matrix must be square and nonempty");
    CELEX_FAIL_IF(!u.allFinite(), ErrorCode::NonFinite, std::string(where) + ": non-finite entries");
    const double r = unitarity_residual(u);
    CELEX_FAIL_IF(r > unitary_tolerance(u.rows()), ErrorCode::NotUnitary,
                  std::string(where) + ": ‖U*U − I‖ = " + std::to_string(r));
}

double operator_norm(const Matrix &a)
{
    if (a.size() == 0) {
        return 0.0;
    }
    CELEX_FAIL_IF(!a.allFinite(), ErrorCode::NonFinite, "operator_norm: non-finite entries");
    const Matrix gram = a.rows() >= a.cols() ? Matrix(a.adjoint() * a) : Matrix(a * a.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

namespace {

void check_modulus(std::complex<double> lambda)
{
    CELEX_FAIL_IF(std::abs(std::abs(lambda) - 1.0) > kModulusTolerance, ErrorCode::NotUnitary,
                  "eigenvalue modulus " + std::to_string(std::abs(lambda)) + " is off the unit circle");
}

} // namespace

std::vector<double> spectrum_unchecked(const Matrix &u)
{
    Eigen::ComplexEigenSolver<Matrix> solver(u, false);
    CELEX_FAIL_IF(solver.info() != Eigen::Success, ErrorCode::EigensolverFailure,
                  "complex Schur iteration did not converge");
    std::vector<double> angles(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        const auto lambda = solver.eigenvalues()[i];
        check_modulus(lambda);
        angles[static_cast<std::size_t>(i)] = angle_of(lambda / std::abs(lambda));
    }
    return angles;
}

std::vector<double> spectrum(const Matrix &u)
{
    require_unitary(u, "spectrum");
    return spectrum_unchecked(u);
}

double min_pairwise_chord(const std::vector<double> &angles)
{
    if (angles.size() < 2) {
        return std::numeric_limits<double>::infinity();
    }
    // Nearest neighbours on the circle are adjacent after sorting.
    std::vector<double> sorted(angles.size());
    std::transform(angles.begin(), angles.end(), sorted.begin(), [](double a) { return wrap(a); });
    std::sort(sorted.begin(), sorted.end());
    double best = chord(sorted.front(), sorted.back());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        best = std::min(best, chord(sorted[i], sorted[i - 1]));
    }
    return best;
}

Matrix UnitaryEigen::hermitian_log() const
{
    return vectors * angles.cast<std::complex<double>>().asDiagonal() * vectors.adjoint();
}

Matrix UnitaryEigen::power(double sigma) const
{
    Eigen::VectorXcd phases(angles.size());
    for (Eigen::Index i = 0; i < angles.size(); ++i) {
        phases[i] = std::polar(1.0, sigma * angles[i]);
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

UnitaryEigen unitary_eigen(const Matrix &u)
{
    CELEX_FAIL_IF(u.rows() != u.cols(), ErrorCode::DimensionMismatch, "unitary_eigen: not square");
    // For a normal matrix the Schur form is diagonal, so the Schur vectors are
    // an orthonormal eigenbasis.
    Eigen::ComplexSchur<Matrix> schur(u, true);
    CELEX_FAIL_IF(schur.info() != Eigen::Success, ErrorCode::EigensolverFailure,
                  "complex Schur iteration did not converge");
    const Matrix &t = schur.matrixT();
    const Eigen::Index n = u.rows();
    double off = 0.0;
    for (Eigen::Index j = 1; j < n; ++j) {
        off = std::max(off, t.col(j).head(j).norm());
    }
    CELEX_FAIL_IF(off > std::max(1e-8, unitary_tolerance(n)), ErrorCode::NotUnitary,
                  "unitary_eigen: Schur form is not diagonal (matrix is not normal)");
    UnitaryEigen result{schur.matrixU(), Eigen::VectorXd(n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        check_modulus(t(i, i));
        result.angles[i] = angle_of(t(i, i));
    }
    return result;
}

Matrix unitary_log(const Matrix &u)
{
    require_unitary(u, "unitary_log");
    UnitaryEigen eig = unitary_eigen(u);
    for (Eigen::Index i = 0; i < eig.angles.size(); ++i) {
        const double dist = std::abs(std::polar(1.0, eig.angles[i]) + 1.0);
        CELEX_FAIL_IF(dist < kBranchCutTolerance, ErrorCode::BranchCut,
                      "unitary_log: eigenvalue within tolerance of −1");
    }
    Matrix h = eig.hermitian_log();
    return 0.5 * (h + h.adjoint());
}

Matrix exp_i(const Matrix &h)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    CELEX_FAIL_IF(solver.info() != Eigen::Success, ErrorCode::EigensolverFailure,
                  "exp_i: Hermitian eigensolver failed");
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases[i] = std::polar(1.0, solver.eigenvalues()[i]);
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Geodesic::Geodesic(const Matrix &g0, const Matrix &g1) : start_(g0)
{
    CELEX_FAIL_IF(g0.rows() != g1.rows() || g0.cols() != g1.cols(), ErrorCode::DimensionMismatch,
                  "geodesic: dimension mismatch");
    const Matrix rel = g0.adjoint() * g1;
    const double gap = operator_norm(rel - Matrix::Identity(rel.rows(), rel.cols()));
    CELEX_FAIL_IF(!(gap < 1.0), ErrorCode::TooFarApart,
                  "geodesic: ‖G0*G1 − I‖ = " + std::to_string(gap) + " is not below 1");
    step_ = unitary_eigen(rel);
}

Matrix Geodesic::at(double sigma) const { return start_ * step_.power(sigma); }

double Geodesic::length() const { return step_.angles.cwiseAbs().maxCoeff(); }

Matrix geodesic_interpolate(const Matrix &g0, const Matrix &g1, double s)
{
    CELEX_FAIL_IF(!(s >= 0.0 && s <= 1.0), ErrorCode::InvalidArgument,
                  "geodesic_interpolate: s outside [0, 1]");
    if (s == 0.0) {
        return g0;
    }
    if (s == 1.0) {
        return g1;
    }
    return Geodesic(g0, g1).at(s);
}

Matrix polar_unitary(const Matrix &a)
{
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

namespace {

Matrix gaussian_matrix(Eigen::Index n, Rng &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(i, j) = {re, im};
        }
    }
    return z;
}

} // namespace

Matrix random_unitary(Eigen::Index n, Rng &rng)
{
    const Matrix z = gaussian_matrix(n, rng);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fixing the phases of diag(R) makes Q Haar distributed.
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto d = r(i, i);
        q.col(i) *= std::abs(d) > 0.0 ? d / std::abs(d) : std::complex<double>(1.0);
    }
    return q;
}

Matrix random_hermitian(Eigen::Index n, Rng &rng)
{
    const Matrix z = gaussian_matrix(n, rng);
    Matrix h = 0.5 * (z + z.adjoint());
    const double norm = operator_norm(h);
    return norm > 0.0 ? Matrix(h / norm) : h;
}

bool is_diagonal(const Matrix &a)
{
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j && a(i, j) != std::complex<double>(0.0)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace celex
