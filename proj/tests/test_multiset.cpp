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

#include "celex/error.hpp"
#include "celex/multiset.hpp"
#include "celex/unitary.hpp"
#include "selftest/oracles.hpp"

using namespace celex;

TEST_SUITE("multiset")
{
    TEST_CASE("bottleneck examples")
    {
        const std::vector<double> a{0.0, 1.0, 4.0};
        const std::vector<double> b{1.0, 2.0, 3.0};
        CHECK(bottleneck_distance(a, a, Metric::absolute) == 0.0);
        CHECK(bottleneck_distance(a, b, Metric::absolute) == 1.0);
        const std::vector<double> ones{0.0, 0.0};
        const std::vector<double> spread{kPi / 4.0, -kPi / 4.0};
        CHECK(bottleneck_distance(ones, spread, Metric::chordal) ==
              doctest::Approx(2.0 * std::sin(kPi / 8.0)).epsilon(1e-14));
        CHECK_THROWS_AS((void)bottleneck_distance(a, ones, Metric::absolute), Error);
    }

    TEST_CASE("bottleneck agrees with permutation search")
    {
        Rng rng(5);
        std::uniform_int_distribution<int> size(1, 6);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        for (int trial = 0; trial < 300; ++trial) {
            const int k = size(rng);
            std::vector<double> a(k), b(k);
            for (int i = 0; i < k; ++i) {
                a[i] = angle(rng);
                b[i] = angle(rng);
            }
            for (const auto m : {Metric::chordal, Metric::arc, Metric::absolute}) {
                CHECK(bottleneck_distance(a, b, m) == oracle::permutation_bottleneck(a, b, m));
            }
        }
    }

    TEST_CASE("sorting isometry")
    {
        CHECK(sort_lift_theta(RealMultiset{{3.0, 1.0, 2.0}}) == std::vector<double>{1.0, 2.0, 3.0});
        const RealMultiset a{{0.0, 10.0}};
        const RealMultiset b{{5.0, 6.0}};
        CHECK(d_max(sort_lift_theta(a), sort_lift_theta(b)) == 5.0);
        CHECK(bottleneck_distance(a, b) == 5.0);

        RealMultiset end{{-0.895}};
        RealMultiset start{{0.0}};
        for (int i = 0; i < 9; ++i) {
            end.values.push_back(0.095);
            start.values.push_back(0.0);
        }
        CHECK(d_max(sort_lift_theta(end), sort_lift_theta(start)) == doctest::Approx(0.895));
    }

    TEST_CASE("Weyl-type gap")
    {
        const Matrix i2 = Matrix::Identity(2, 2);
        const auto same = weyl_gap(i2, i2);
        CHECK(same.spectral == 0.0);
        CHECK(same.operator_norm == 0.0);

        Matrix v = Matrix::Zero(2, 2);
        v(0, 0) = std::polar(1.0, kPi / 4.0);
        v(1, 1) = std::polar(1.0, -kPi / 4.0);
        const auto g = weyl_gap(i2, v);
        CHECK(g.spectral == doctest::Approx(2.0 * std::sin(kPi / 8.0)));
        CHECK(g.operator_norm == doctest::Approx(2.0 * std::sin(kPi / 8.0)));

        Rng rng(9);
        for (int trial = 0; trial < 200; ++trial) {
            const Eigen::Index n = 2 + trial % 7;
            const auto w = weyl_gap(random_unitary(n, rng), random_unitary(n, rng));
            CHECK(w.spectral <= w.operator_norm + 1e-9);
        }
    }
}
