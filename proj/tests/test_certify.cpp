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

#include <cmath>

#include "celex/certify.hpp"
#include "celex/corpus.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/homotopy.hpp"

using namespace celex;

namespace {

UnitaryHomotopy conjugated(const UnitaryHomotopy &f, const Matrix &q)
{
    UnitaryHomotopy g = f;
    for (auto &m : g.matrices) {
        m = q * m * q.adjoint();
    }
    return g;
}

} // namespace

TEST_SUITE("certify")
{
    TEST_CASE("single exponential upper bounds")
    {
        CHECK(upper_bound_single_exponential(build_example_u()) == doctest::Approx(1.8 * kPi));
        CHECK(upper_bound_single_exponential(build_u_eps(0.005)) == doctest::Approx(kTwoPi * 0.895));

        const AffineAngleFamily small{{{-0.9 * kPi, 0.0, 1}, {0.3 * kPi, 0.0, 3}}};
        const auto f = family_geodesic_homotopy(small, {2, 101});
        CHECK(upper_bound_single_exponential(f.row(1)) == doctest::Approx(0.9 * kPi).epsilon(1e-10));

        // A scalar path through −1 has no continuous principal logarithm.
        UnitaryPath path;
        for (const double t : uniform_grid(11)) {
            path.t_grid.push_back(t);
            path.matrices.push_back(Matrix::Constant(1, 1, std::polar(1.0, 1.5 * kPi * t)));
        }
        CHECK_THROWS_AS((void)upper_bound_single_exponential(path), Error);
    }

    TEST_CASE("identity gives a zero bound")
    {
        const auto f = constant_homotopy(Matrix::Identity(3, 3), uniform_grid(5), uniform_grid(5));
        TargetSpec target;
        target.description = "identity";
        target.terminal_angle = [](double) { return 0.0; };
        const auto cert = certify_lower_bound(f, target);
        CHECK(cert.lower_bound == 0.0);
        CHECK(cert.lower_bound <= cert.homotopy_length + 1e-12);
    }

    TEST_CASE("propagation")
    {
        CHECK(propagate_cel_bounds(3.0, 0.1, PropagationMode::norm_perturbation) ==
              doctest::Approx(3.0 - 0.05 * kPi));
        CHECK(propagate_cel_bounds(3.0, 0.0, PropagationMode::norm_perturbation) == 3.0);
        CHECK(propagate_cel_bounds(3.0, 0.7, PropagationMode::conjugation) == 3.0);
        CHECK_THROWS_AS((void)propagate_cel_bounds(3.0, 1.0, PropagationMode::norm_perturbation), Error);
        CHECK_THROWS_AS((void)propagate_cel_bounds(3.0, -0.1, PropagationMode::norm_perturbation), Error);
    }

    TEST_CASE("ten-dimensional example certificate")
    {
        const auto cert = example_u_certificate({60, 60});
        REQUIRE(cert.upper_bound.has_value());
        CHECK(*cert.upper_bound == doctest::Approx(1.8 * kPi));
        CHECK(cert.lower_bound <= *cert.upper_bound);
        CHECK(cert.lower_bound > 5.5);
        CHECK(cert.lower_bound <= cert.homotopy_length + 1e-12);
        CHECK(cert.displacement == doctest::Approx(1.8 * kPi).epsilon(1e-2));
        CHECK(cert.total_slack() >= 0.0);
        CHECK_FALSE(cert.provenance.empty());
    }

    TEST_CASE("certificate does not depend on the basis")
    {
        Rng rng(7);
        const auto f = family_geodesic_homotopy(build_example_u(), {40, 40});
        const auto q = random_unitary(10, rng);
        const auto target = family_target(build_example_u(), 0, 0, "fast");
        CertifyOptions options;
        options.seed = 3;
        const auto a = certify_lower_bound(f, target, options);
        const auto b = certify_lower_bound(conjugated(f, q), target, options);
        CHECK(a.lower_bound > 5.5);
        CHECK(b.lower_bound > 5.5);
        CHECK(b.lower_bound == doctest::Approx(a.lower_bound).epsilon(5e-3));
        CHECK(a.homotopy_length == doctest::Approx(b.homotopy_length).epsilon(1e-10));
    }

    TEST_CASE("detours cannot fool the bound")
    {
        Rng rng(11);
        const auto u = build_example_u();
        const auto p = random_unitary(10, rng);
        const auto f = detour_homotopy(u, p, 1.0, {60, 40});
        const auto cert = certify_lower_bound(f, family_target(u, 0, 0, "fast"));
        CHECK(cert.lower_bound <= homotopy_length(f) + 1e-12);
        CHECK(cert.lower_bound > 5.5);
    }

    TEST_CASE("a target no branch follows")
    {
        const auto f = family_geodesic_homotopy(build_example_u(), {20, 20});
        TargetSpec target;
        target.description = "nowhere";
        target.terminal_angle = [](double t) { return 0.9 * kPi * t; };
        target.tolerance = 1e-3;
        try {
            (void)certify_lower_bound(f, target);
            FAIL("expected BranchNotFound");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::BranchNotFound);
        }
    }

    TEST_CASE("start must be the identity")
    {
        const auto f = constant_homotopy(Matrix::Identity(2, 2) * std::complex<double>(0.0, 1.0),
                                         uniform_grid(3), uniform_grid(3));
        TargetSpec target;
        target.terminal_angle = [](double) { return 0.0; };
        CHECK_THROWS_AS((void)certify_lower_bound(f, target), Error);
    }
}
