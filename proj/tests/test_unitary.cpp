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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "celex/angle.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/unitary.hpp"
#include "selftest/oracles.hpp"

using namespace celex;

namespace {

Matrix diag2(double a, double b)
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, a);
    m(1, 1) = std::polar(1.0, b);
    return m;
}

} // namespace

TEST_SUITE("unitary")
{
    TEST_CASE("spectrum")
    {
        CHECK(spectrum(Matrix::Identity(3, 3)) == std::vector<double>{0.0, 0.0, 0.0});

        auto half = spectrum(build_example_u().matrix(0.5));
        std::sort(half.begin(), half.end());
        CHECK(half.front() == doctest::Approx(-0.9 * kPi));
        for (std::size_t j = 1; j < half.size(); ++j) {
            CHECK(half[j] == doctest::Approx(0.1 * kPi));
        }

        Rng rng(1);
        const Matrix v = random_unitary(4, rng);
        std::vector<double> theta{-2.0, -0.5, 0.7, 2.5};
        Matrix d = Matrix::Zero(4, 4);
        for (int j = 0; j < 4; ++j) {
            d(j, j) = std::polar(1.0, theta[static_cast<std::size_t>(j)]);
        }
        auto got = spectrum(v * d * v.adjoint());
        std::sort(got.begin(), got.end());
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(got[j] == doctest::Approx(theta[j]).epsilon(1e-9));
        }

        Matrix bad = Matrix::Identity(2, 2);
        bad(0, 1) = 0.5;
        CHECK_THROWS_AS((void)spectrum(bad), Error);
    }

    TEST_CASE("operator norm")
    {
        CHECK(operator_norm(Matrix::Identity(5, 5)) == doctest::Approx(1.0));
        const double theta = 1.3;
        CHECK(operator_norm(diag2(theta, 0.0) - Matrix::Identity(2, 2)) ==
              doctest::Approx(2.0 * std::abs(std::sin(theta / 2.0))));
        Rng rng(2);
        for (int trial = 0; trial < 50; ++trial) {
            const Eigen::Index n = 2 + trial % 6;
            const Matrix d = random_unitary(n, rng) - random_unitary(n, rng);
            CHECK(std::abs(operator_norm(d) - oracle::svd_norm(d)) < 1e-9);
        }
    }

    TEST_CASE("principal logarithm")
    {
        CHECK(unitary_log(Matrix::Identity(3, 3)).norm() < 1e-15);
        const Matrix h = unitary_log(diag2(kPi / 3.0, -kPi / 3.0));
        CHECK(h(0, 0).real() == doctest::Approx(kPi / 3.0));
        CHECK(h(1, 1).real() == doctest::Approx(-kPi / 3.0));
        CHECK(std::abs(h(0, 1)) < 1e-14);

        Rng rng(4);
        std::uniform_real_distribution<double> angle(-kPi + 0.1, kPi - 0.1);
        for (int trial = 0; trial < 50; ++trial) {
            const Eigen::Index n = 2 + trial % 5;
            const Matrix q = random_unitary(n, rng);
            Matrix d = Matrix::Zero(n, n);
            for (Eigen::Index j = 0; j < n; ++j) {
                d(j, j) = std::polar(1.0, angle(rng));
            }
            const Matrix u = q * d * q.adjoint();
            const Matrix log_u = unitary_log(u);
            CHECK((log_u - log_u.adjoint()).norm() < 1e-12);
            CHECK((exp_i(log_u) - u).norm() < 1e-9);
        }
        CHECK_THROWS_AS((void)unitary_log(diag2(kPi, 0.0)), Error);
    }

    TEST_CASE("geodesic interpolation")
    {
        Rng rng(6);
        const Matrix g = random_unitary(3, rng);
        CHECK((geodesic_interpolate(g, g, 0.3) - g).norm() < 1e-12);

        const Matrix mid = geodesic_interpolate(Matrix::Identity(2, 2), diag2(kPi / 4.0, kPi / 8.0), 0.5);
        CHECK((mid - diag2(kPi / 8.0, kPi / 16.0)).norm() < 1e-12);

        const Matrix g1 = g * exp_i(0.4 * random_hermitian(3, rng));
        for (const double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            CHECK(unitarity_residual(geodesic_interpolate(g, g1, s)) < unitary_tolerance(3));
        }
        CHECK((geodesic_interpolate(g, g1, 1.0) - g1).norm() < 1e-10);
        CHECK_THROWS_AS((void)geodesic_interpolate(Matrix::Identity(2, 2), -Matrix::Identity(2, 2), 0.5),
                        Error);
    }

    TEST_CASE("random generators")
    {
        Rng rng(8);
        const Matrix u = random_unitary(6, rng);
        CHECK(unitarity_residual(u) < unitary_tolerance(6));
        const Matrix h = random_hermitian(6, rng);
        CHECK((h - h.adjoint()).norm() < 1e-14);
        CHECK(operator_norm(h) == doctest::Approx(1.0));
        CHECK(is_diagonal(diag2(0.1, 0.2)));
        CHECK_FALSE(is_diagonal(u));
    }
}
