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
#include <random>
#include <vector>

#include "celex/angle.hpp"
#include "celex/error.hpp"
#include "selftest/oracles.hpp"

using namespace celex;

TEST_SUITE("angle")
{
    TEST_CASE("wrap picks the representative in (-pi, pi]")
    {
        CHECK(wrap(0.0) == 0.0);
        CHECK(wrap(3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-15));
        CHECK(wrap(-3.0 * kPi / 2.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
        CHECK(wrap(-kPi) == kPi);
        CHECK_THROWS_AS((void)wrap(std::nan("")), Error);
    }

    TEST_CASE("chord and arc distances")
    {
        CHECK(chord(0.0, kPi) == doctest::Approx(2.0));
        CHECK(arc_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
        CHECK(arc_of_chord(chord_of_arc(1.0)) == doctest::Approx(1.0));
    }

    TEST_CASE("lifting a sampled circle path")
    {
        const std::vector<double> simple{0.0, 0.1, 0.2};
        const auto a = lift_circle_path(simple, 0.0);
        CHECK(a.values == std::vector<double>{0.0, 0.1, 0.2});

        std::vector<double> fast;
        for (int i = 0; i < 100; ++i) {
            fast.push_back(wrap(-kTwoPi * 0.9 * i / 99.0));
        }
        const auto b = lift_circle_path(fast, 0.0);
        CHECK(b.values.back() == doctest::Approx(-1.8 * kPi).epsilon(1e-12));

        const std::vector<double> big{0.0, wrap(kPi - 0.01), wrap(kTwoPi - 0.02), wrap(3.0 * kPi - 0.03)};
        const auto c = lift_circle_path(big, 0.0);
        CHECK(c.values.back() == doctest::Approx(3.0 * kPi - 0.03).epsilon(1e-12));
        for (std::size_t i = 1; i < c.values.size(); ++i) {
            CHECK(c.values[i] > c.values[i - 1]);
        }
    }

    TEST_CASE("lifting rejects half-turn steps and bad input")
    {
        const std::vector<double> jump{0.0, kPi};
        CHECK_THROWS_AS((void)lift_circle_path(jump, 0.0), Error);
        const std::vector<double> pts{0.0, 0.1};
        const std::vector<double> grid{0.0, 0.0};
        CHECK_THROWS_AS((void)lift_circle_path(pts, 0.0, grid), Error);
        CHECK_THROWS_AS((void)lift_circle_path(pts, 1.0), Error);
    }

    TEST_CASE("scalar exponential length")
    {
        CHECK(cel_scalar_exponential(kTwoPi * 9.0 / 10.0) == 9.0 * kPi / 5.0);
        CHECK(cel_scalar_exponential(0.0) == 0.0);
        CHECK(cel_scalar_exponential(3.0 * kPi) == doctest::Approx(kTwoPi));
        CHECK(cel_scalar_exponential(4.0 * kPi) == doctest::Approx(kTwoPi));
        CHECK(optimal_winding(3.0 * kPi) == 1);

        Rng rng(3);
        std::uniform_real_distribution<double> wide(-60.0, 60.0);
        for (int i = 0; i < 200; ++i) {
            const double a = wide(rng);
            CHECK(cel_scalar_exponential(a) == oracle::scalar_cel_by_search(a, -12, 12));
        }
    }

    TEST_CASE("optimal scalar homotopy lengths")
    {
        const auto s = uniform_grid(1000);
        const auto t = uniform_grid(101);
        CHECK(scalar_homotopy_length(optimal_scalar_homotopy(kPi, s, t)) == doctest::Approx(kPi).epsilon(1e-3));
        CHECK(scalar_homotopy_length(optimal_scalar_homotopy(0.0, s, t)) == 0.0);
        const auto h = optimal_scalar_homotopy(3.0 * kPi, s, t);
        CHECK(std::abs(scalar_homotopy_length(h) - kTwoPi) < 5e-3);
        CHECK(std::abs(h.at(999, 100) - std::polar(1.0, kPi)) < 1e-12);
    }
}
