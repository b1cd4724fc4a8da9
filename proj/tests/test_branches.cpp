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
#include <sstream>
#include <vector>

#include "celex/branches.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/perturb.hpp"

using namespace celex;

namespace {

UnitaryHomotopy perturbed_example(std::size_t s, std::size_t t)
{
    const auto h = family_to_homotopy(build_example_u(), {}, uniform_grid(s), uniform_grid(t));
    return perturb_to_simple_spectrum(h, 0.005).homotopy;
}

} // namespace

TEST_SUITE("branches")
{
    TEST_CASE("diagonal homotopy with distinct slopes is recovered exactly")
    {
        const AffineAngleFamily f{{{-1.0, 0.0, 1}, {0.5, 2.0, 1}, {0.3, -2.0, 1}}};
        // Start at the identity only in the limit: use s from 0.2 so the
        // spectrum is simple at every node.
        const std::vector<double> s{0.2, 0.4, 0.6, 0.8, 1.0};
        const auto h = family_to_homotopy(f, {}, s, uniform_grid(30));
        const auto b = track_branches(h);
        CHECK(b.k == 3);
        CHECK(branch_consistency(b, h) < 1e-9);
        // Base labels follow the ascending angles at the first node: -0.4, 0, 0.4.
        const std::vector<std::size_t> term_of_branch{2, 0, 1};
        for (std::size_t j = 0; j < 3; ++j) {
            const auto &term = f.terms[term_of_branch[j]];
            for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t l = 0; l < b.t_grid.size(); ++l) {
                    CHECK(b.lift(j, i, l) == doctest::Approx(s[i] * term.at(b.t_grid[l])).epsilon(1e-12));
                }
            }
        }
    }

    TEST_CASE("fast branch of u winds by -1.8 pi")
    {
        const auto g = perturbed_example(80, 60);
        const auto b = track_branches(g);
        CHECK(branch_consistency(b, g) < 1e-9);
        CHECK(b.gap > 0.0);
        std::size_t fast = b.k;
        for (std::size_t j = 0; j < b.k; ++j) {
            if (std::abs(b.lift(j, 79, 30) - (-1.8 * kPi * b.t_grid[30])) < 0.02) {
                fast = j;
            }
        }
        REQUIRE(fast < b.k);
        for (std::size_t l = 0; l < b.t_grid.size(); ++l) {
            CHECK(std::abs(b.lift(fast, 79, l) + 1.8 * kPi * b.t_grid[l]) < 0.02);
        }
        CHECK(std::abs(branch_displacement_bound(b, fast) - 1.8 * kPi) < 0.02);
        for (std::size_t j = 0; j < b.k; ++j) {
            CHECK(branch_length(b, j) <= homotopy_length(g) + 1e-6);
        }
    }

    TEST_CASE("conjugation leaves the lifts unchanged")
    {
        const auto g = perturbed_example(30, 20);
        Rng rng(12);
        const Matrix v = random_unitary(10, rng);
        auto c = g;
        for (auto &m : c.matrices) {
            m = v * m * v.adjoint();
        }
        const auto a = track_branches(g);
        const auto b = track_branches(c);
        CHECK(lift_agreement(a, b) < 1e-9);
    }

    TEST_CASE("refinement and thread count do not change the lifts")
    {
        const auto g = perturbed_example(30, 20);
        const auto a = track_branches(g);
        const auto fine = track_branches(bisect_s(g));
        CHECK(lift_agreement(a, fine) < 1e-8);
        TrackOptions opts;
        opts.threads = 3;
        const auto threaded = track_branches(g, opts);
        CHECK(threaded.lifts == a.lifts);
    }

    TEST_CASE("scalar optimal homotopy branches")
    {
        const auto s = uniform_grid(400);
        const auto t = uniform_grid(41);
        const auto one = embed_scalar(optimal_scalar_homotopy(kPi, s, t));
        const auto b = track_branches(one);
        CHECK(branch_length(b, 0) == doctest::Approx(kPi).epsilon(1e-3));

        const auto three = embed_scalar(optimal_scalar_homotopy(3.0 * kPi, s, t));
        const auto c = track_branches(three);
        CHECK(branch_displacement_bound(c, 0) == doctest::Approx(kTwoPi).epsilon(1e-9));
    }

    TEST_CASE("constant branches and repeated eigenvalues")
    {
        const auto id = constant_homotopy(Matrix::Identity(1, 1), uniform_grid(4), uniform_grid(4));
        const auto b = track_branches(id);
        CHECK(branch_displacement_bound(b, 0) == 0.0);
        CHECK(branch_length(b, 0) == 0.0);
        const auto id2 = constant_homotopy(Matrix::Identity(2, 2), uniform_grid(4), uniform_grid(4));
        CHECK_THROWS_AS((void)track_branches(id2), AmbiguousMatchingError);
    }

    TEST_CASE("a step too large to resolve reports the node")
    {
        // Three evenly spaced eigenvalues turn by more than a third of the
        // circle within one coarse t step.
        const AffineAngleFamily f{{{1.2, 0.0, 1}, {1.2, kTwoPi / 3.0, 1}, {1.2, 2.0 * kTwoPi / 3.0, 1}}};
        const auto h = family_to_homotopy(f, {}, {0.99, 1.0}, {0.0, 1.0});
        TrackOptions opts;
        opts.max_depth = 0;
        try {
            (void)track_branches(h, opts);
            FAIL("expected AmbiguousMatchingError");
        } catch (const AmbiguousMatchingError &e) {
            CHECK(e.axis() == AmbiguousMatchingError::Axis::t);
            CHECK(e.t_index() == 1);
        }
    }

    TEST_CASE("CSV export")
    {
        const auto id = constant_homotopy(Matrix::Identity(1, 1), uniform_grid(2), uniform_grid(2));
        std::ostringstream os;
        write_branch_csv(track_branches(id), os);
        CHECK(os.str() == "j,s,t,phi\n0,0,0,0\n0,0,1,0\n0,1,0,0\n0,1,1,0\n");
    }
}
