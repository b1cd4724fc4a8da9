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
#include <vector>

#include "celex/angle.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/homotopy.hpp"
#include "celex/perturb.hpp"
#include "selftest/oracles.hpp"

using namespace celex;

TEST_SUITE("homotopy")
{
    TEST_CASE("lengths of basic homotopies")
    {
        const auto id = constant_homotopy(Matrix::Identity(3, 3), uniform_grid(5), uniform_grid(4));
        CHECK(homotopy_length(id) == 0.0);

        const auto scalar = embed_scalar(optimal_scalar_homotopy(kPi, uniform_grid(1000), uniform_grid(51)));
        CHECK(homotopy_length(scalar) == doctest::Approx(kPi).epsilon(1e-3));

        const auto ex = family_to_homotopy(build_example_u(), {}, uniform_grid(200), uniform_grid(200));
        CHECK(std::abs(homotopy_length(ex) - 9.0 * kPi / 5.0) < 0.01);
        CHECK(homotopy_arc_length(ex) >= homotopy_length(ex));
        CHECK(homotopy_arc_length(ex) == doctest::Approx(9.0 * kPi / 5.0).epsilon(1e-9));
    }

    TEST_CASE("refinement keeps the path")
    {
        const auto ex = family_to_homotopy(build_example_u(), {}, uniform_grid(9), uniform_grid(7));
        const auto fine = refine_s_until(ex, 0.1);
        for (const double step : homotopy_step_norms(fine)) {
            CHECK(step < 0.1);
        }
        CHECK(homotopy_arc_length(fine) == doctest::Approx(homotopy_arc_length(ex)).epsilon(1e-9));
        const auto twice = bisect_s(ex);
        CHECK(twice.rows() == 2 * ex.rows() - 1);
        CHECK(chord_arc_excess(1e-6) == doctest::Approx(0.0));
        CHECK(chord_arc_excess(1.0) == doctest::Approx(2.0 * std::asin(0.5) - 1.0));
    }

    TEST_CASE("validation")
    {
        auto h = constant_homotopy(Matrix::Identity(2, 2), uniform_grid(3), uniform_grid(3));
        h.at(1, 1)(0, 1) = 0.3;
        CHECK_THROWS_AS(h.validate(), Error);
    }
}

TEST_SUITE("perturb")
{
    TEST_CASE("already simple input is returned unchanged")
    {
        const AffineAngleFamily f{{{1.0, 0.5, 1}, {0.5, -1.0, 1}, {-0.3, 2.0, 1}}};
        std::vector<double> s{0.5, 1.0};
        const auto h = family_to_homotopy(f, {}, {0.5, 1.0}, uniform_grid(5));
        const auto r = perturb_to_simple_spectrum(h, 0.01);
        CHECK(r.unchanged);
        CHECK(sup_distance(r.homotopy, h) == 0.0);
    }

    TEST_CASE("identity homotopy gets distinct eigenvalues")
    {
        const auto id = constant_homotopy(Matrix::Identity(4, 4), uniform_grid(6), uniform_grid(6));
        const auto r = perturb_to_simple_spectrum(id, 0.01);
        CHECK(sup_distance(r.homotopy, id) <= 0.01);
        CHECK(oracle::pairwise_gap_scan(r.homotopy) > 0.0);
        CHECK(min_spectral_gap(r.homotopy) == doctest::Approx(oracle::pairwise_gap_scan(r.homotopy)).epsilon(1e-9));
    }

    TEST_CASE("gap of a diagonal sweep vanishes at t = 0")
    {
        const AffineAngleFamily f{{{0.0, 0.0, 1}, {kTwoPi * 0.1, 0.0, 1}, {kTwoPi * 0.2, 0.0, 1}, {kTwoPi * 0.3, 0.0, 1}}};
        const auto h = family_to_homotopy(f, {}, uniform_grid(3), uniform_grid(11));
        CHECK(min_spectral_gap(h) == 0.0);
        CHECK(min_spectral_gap(constant_homotopy(Matrix::Identity(2, 2), uniform_grid(2), uniform_grid(2))) == 0.0);
    }

    TEST_CASE("structured offsets keep the target slot")
    {
        const double eps = 0.005;
        const auto offsets = offset_schedule(10, 0, eps);
        CHECK(offsets[0] == 0.0);
        for (std::size_t k = 1; k < offsets.size(); ++k) {
            CHECK(offsets[k] > offsets[k - 1]);
            CHECK(offsets[k] < eps);
        }
        // Repeated slow entries, target slot 0 winding slower than the rest
        // so that no crossing occurs.
        const AffineAngleFamily f{{{-1.0, 0.0, 1}, {1.0, 0.0, 4}}};
        const auto h = family_to_homotopy(f, {}, uniform_grid(9), uniform_grid(9));
        PerturbOptions opts;
        opts.target_slot = 0;
        const auto r = perturb_to_simple_spectrum(h, eps, opts);
        CHECK(r.structured);
        CHECK(r.min_gap > 0.0);
        for (std::size_t i = 0; i < h.rows(); ++i) {
            for (std::size_t l = 0; l < h.cols(); ++l) {
                CHECK(std::abs(r.homotopy.at(i, l)(0, 0) - h.at(i, l)(0, 0)) < 1e-15);
            }
        }
    }

    TEST_CASE("end row is pinned when already simple")
    {
        const AffineAngleFamily f{{{0.3, 0.0, 1}, {0.2, 2.0, 1}, {0.1, -2.0, 1}}};
        const auto h = family_to_homotopy(f, {}, uniform_grid(8), uniform_grid(8));
        const auto r = perturb_to_simple_spectrum(h, 0.01);
        CHECK(r.pinned_endpoint);
        for (std::size_t l = 0; l < h.cols(); ++l) {
            CHECK(r.homotopy.at(7, l) == h.at(7, l));
        }
        CHECK(r.sup_change <= 0.01);
        CHECK(r.length_change <= 0.01);
    }

    TEST_CASE("bad delta is rejected")
    {
        const auto id = constant_homotopy(Matrix::Identity(2, 2), uniform_grid(3), uniform_grid(3));
        CHECK_THROWS_AS((void)perturb_to_simple_spectrum(id, 0.0), Error);
    }
}
