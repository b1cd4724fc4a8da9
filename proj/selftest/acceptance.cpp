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

#include "selftest/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "celex/angle.hpp"
#include "celex/branches.hpp"
#include "celex/certify.hpp"
#include "celex/corpus.hpp"
#include "celex/error.hpp"
#include "celex/goodearl.hpp"
#include "celex/multiset.hpp"
#include "celex/perturb.hpp"
#include "selftest/oracles.hpp"

namespace celex::selftest {

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            if (pass) {
                detail << "FAILED: ";
            } else {
                detail << "; ";
            }
            detail << what;
            pass = false;
        }
    }
};

std::string num(double v, int digits = 6)
{
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, v);
    return buffer;
}

const double kNineFifthsPi = 9.0 * kPi / 5.0;

Outcome scalar_formula(const SuiteOptions &o)
{
    Outcome out;
    Rng rng(o.seed);
    std::uniform_real_distribution<double> small(-kTwoPi, kTwoPi);
    std::uniform_real_distribution<double> large(-20.0 * kPi, 20.0 * kPi);
    int exact = 0;
    for (int i = 0; i < 200; ++i) {
        const double a = small(rng);
        exact += cel_scalar_exponential(a) == std::abs(a) ? 1 : 0;
    }
    int brute = 0;
    std::vector<double> sample;
    for (int i = 0; i < 200; ++i) {
        const double a = large(rng);
        brute += cel_scalar_exponential(a) == oracle::scalar_cel_by_search(a, -12, 12) ? 1 : 0;
        if (i % 10 == 0) {
            sample.push_back(a);
        }
    }
    const auto s_grid = uniform_grid(1000);
    const auto t_grid = uniform_grid(101);
    double worst = 0.0;
    for (const double a : sample) {
        const auto h = optimal_scalar_homotopy(a, s_grid, t_grid);
        worst = std::max(worst, std::abs(scalar_homotopy_length(h) - cel_scalar_exponential(a)));
    }
    out.require(exact == 200, "|alpha| identity held for " + std::to_string(exact) + "/200");
    out.require(brute == 200, "brute-force agreement " + std::to_string(brute) + "/200");
    out.require(worst < 5e-3, "discrete homotopy length error " + num(worst));
    if (out.pass) {
        out.detail << "|alpha| exact 200/200, brute force 200/200, homotopy length error "
                   << num(worst, 3) << " on 1000 s-points";
    }
    return out;
}

Outcome theta_isometry(const SuiteOptions &o)
{
    Outcome out;
    Rng rng(o.seed + 1);
    std::uniform_int_distribution<int> size(2, 7);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    int agree = 0;
    int exact = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = size(rng);
        RealMultiset a;
        RealMultiset b;
        for (int i = 0; i < k; ++i) {
            // Round some values so that ties occur.
            const double x = value(rng);
            const double y = value(rng);
            a.values.push_back(trial % 3 == 0 ? std::round(x) : x);
            b.values.push_back(trial % 3 == 0 ? std::round(y) : y);
        }
        const double sorted = d_max(sort_lift_theta(a), sort_lift_theta(b));
        const double brute = oracle::permutation_bottleneck(a.values, b.values, Metric::absolute);
        const double diff = std::abs(sorted - brute);
        worst = std::max(worst, diff);
        agree += diff <= 1e-12 ? 1 : 0;
        exact += diff == 0.0 ? 1 : 0;
    }
    out.require(agree == 1000, "agreement " + std::to_string(agree) + "/1000, worst " + num(worst));
    if (out.pass) {
        out.detail << "1000/1000 within 1e-12 (exact " << exact << "/1000)";
    }
    return out;
}

Outcome weyl_inequality(const SuiteOptions &o)
{
    Outcome out;
    Rng rng(o.seed + 2);
    std::uniform_int_distribution<int> dim(2, 8);
    std::uniform_real_distribution<double> scale(0.0, 1.0);
    int held = 0;
    double tightest = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index n = dim(rng);
        const Matrix u = random_unitary(n, rng);
        // Half the pairs are close, where the inequality is nearly tight.
        const Matrix v = trial % 2 == 0
                             ? Matrix(random_unitary(n, rng))
                             : Matrix(u * exp_i(0.5 * scale(rng) * random_hermitian(n, rng)));
        const double spectral = bottleneck_distance(spectrum(u), spectrum(v), Metric::chordal);
        const double norm = oracle::svd_norm(u - v);
        held += spectral <= norm + 1e-9 ? 1 : 0;
        tightest = std::min(tightest, norm - spectral);
    }
    out.require(held == 1000, "inequality held for " + std::to_string(held) + "/1000");
    if (out.pass) {
        out.detail << "1000/1000, smallest margin " << num(tightest, 3);
    }
    return out;
}

Outcome example_bracket(const SuiteOptions &o)
{
    Outcome out;
    const double upper = upper_bound_single_exponential(build_example_u());
    CertifyOptions copts;
    copts.seed = o.seed;
    copts.threads = o.threads;
    const auto cert = example_u_certificate({400, 400}, copts);
    const double lower = cert.lower_bound;
    out.require(upper == kNineFifthsPi, "upper bound " + num(upper, 17) + " != 9pi/5");
    out.require(lower >= kNineFifthsPi - 0.03 && lower <= kNineFifthsPi,
                "lower bound " + num(lower) + " outside [9pi/5 - 0.03, 9pi/5]");
    out.require(upper - lower <= 0.03, "bracket width " + num(upper - lower));
    if (out.pass) {
        out.detail << "upper = 9pi/5 exactly, lower " << num(lower, 8) << ", width "
                   << num(upper - lower, 3) << " on 400x400";
    }
    return out;
}

Outcome adversarial_soundness(const SuiteOptions &o)
{
    Outcome out;
    const auto u = build_example_u();
    const auto corpus = adversarial_corpus(u, 20, o.seed + 3, {100, 80});
    CertifyOptions copts;
    copts.seed = o.seed;
    copts.threads = o.threads;
    double min_lower = std::numeric_limits<double>::infinity();
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto &entry : corpus) {
        try {
            const auto cert = certify_lower_bound(entry.homotopy, family_target(u, 0, 0, entry.name), copts);
            const double margin = cert.homotopy_length + 1e-6 - cert.lower_bound;
            min_lower = std::min(min_lower, cert.lower_bound);
            min_margin = std::min(min_margin, margin);
            out.require(margin >= 0.0, entry.name + " lower bound exceeds measured length");
            out.require(cert.lower_bound >= kNineFifthsPi - 0.05,
                        entry.name + " lower bound " + num(cert.lower_bound));
        } catch (const Error &e) {
            out.require(false, entry.name + " raised " + e.what());
        }
    }
    if (out.pass) {
        out.detail << "20/20 sound, smallest lower bound " << num(min_lower, 8)
                   << ", smallest length margin " << num(min_margin, 3);
    }
    return out;
}

Outcome goodearl_stage(const SuiteOptions &o)
{
    Outcome out;
    struct Case {
        std::vector<int> levels;
        std::uint64_t alpha, beta, gamma, size;
        double ratio;
    };
    const std::vector<Case> cases{{{2}, 99, 891, 10, 1000, 0.99},
                                  {{2, 2}, 9801, 88209, 1990, 100000, 0.9801}};
    const double eps = 0.005;
    const auto t_grid = uniform_grid(200);
    CertifyOptions copts;
    copts.seed = o.seed;
    copts.threads = o.threads;
    for (const auto &c : cases) {
        const auto stage = GoodearlStage::with_default_points(c.levels, eps);
        const std::string tag = c.levels.size() == 1 ? "[2]" : "[2,2]";
        out.require(stage.alpha() == c.alpha && stage.beta() == c.beta &&
                        stage.gamma() == c.gamma && stage.size() == c.size,
                    tag + " counts");
        out.require(std::abs(stage.admissibility() - c.ratio) < 1e-15 && stage.admissible(),
                    tag + " admissibility " + num(stage.admissibility()));
        const auto image = goodearl_image(build_u_eps(eps), stage);
        out.require(image.total_size() == c.size, tag + " image size");
        for (const double t : {0.0, 0.3, 1.0}) {
            auto symbolic = image.angles(t);
            std::sort(symbolic.begin(), symbolic.end());
            out.require(symbolic == oracle::enumerate_goodearl(build_u_eps(eps), stage, t),
                        tag + " image differs from block enumeration at t = " + num(t));
        }
        const auto middle = check_middle_branch(image, stage, eps, t_grid);
        out.require(middle.pass && middle.points_checked == 200, tag + " middle branch identity");
        const auto cert = goodearl_certificate(stage, eps, {400, 400}, copts);
        const double needed = kTwoPi * 0.895 - 0.025 - 0.03;
        out.require(cert.lower_bound >= needed,
                    tag + " lower bound " + num(cert.lower_bound) + " < " + num(needed));
        if (out.pass) {
            out.detail << tag << " counts (" << c.alpha << ", " << c.beta << ", " << c.gamma
                       << "), middle branch exact on 200 points, lower " << num(cert.lower_bound, 8)
                       << ". ";
        }
    }
    return out;
}

Outcome epsilon_trend(const SuiteOptions &o)
{
    Outcome out;
    CertifyOptions copts;
    copts.seed = o.seed;
    copts.threads = o.threads;
    std::vector<double> bounds;
    for (const double eps : {0.01, 0.005, 0.002}) {
        const auto stage = GoodearlStage::with_default_points({2}, eps);
        bounds.push_back(goodearl_certificate(stage, eps, {400, 400}, copts).lower_bound);
    }
    out.require(bounds[0] < bounds[1] && bounds[1] < bounds[2], "eps sweep not increasing");
    out.require(bounds[2] < kTwoPi * 0.9, "sweep bound exceeds 2pi*9/10");
    const auto [family, cert] = near_2pi_example(2, {400, 400}, copts);
    const double needed = kTwoPi * 0.99 - 0.05;
    out.require(cert.lower_bound >= needed, "near-2pi bound " + num(cert.lower_bound));
    out.require(family.total_size() == 100, "near-2pi family size");
    if (out.pass) {
        out.detail << "eps 0.01/0.005/0.002 -> " << num(bounds[0], 7) << " < " << num(bounds[1], 7)
                   << " < " << num(bounds[2], 7) << " (2pi*0.9 = " << num(kTwoPi * 0.9, 7)
                   << "); k=2 lower " << num(cert.lower_bound, 7) << " >= " << num(needed, 7);
    }
    return out;
}

bool row_is_simple(const UnitaryHomotopy &f, std::size_t i)
{
    for (std::size_t l = 0; l < f.cols(); ++l) {
        if (!(min_pairwise_chord(spectrum_unchecked(f.at(i, l))) > kSimpleGapTolerance)) {
            return false;
        }
    }
    return true;
}

Outcome perturbation_contract(const SuiteOptions &o)
{
    Outcome out;
    const auto corpus = collision_corpus(20, o.seed + 4, {30, 30});
    int pinned = 0;
    double worst_sup = 0.0;
    double worst_len = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < corpus.size(); ++e) {
        const auto &entry = corpus[e];
        PerturbOptions popts;
        popts.seed = o.seed + e;
        try {
            const auto report = perturb_to_simple_spectrum(entry.homotopy, 0.01, popts);
            const auto &g = report.homotopy;
            const double sup = sup_distance(g, entry.homotopy);
            const double len = std::abs(homotopy_length(g) - homotopy_length(entry.homotopy));
            const double gap = oracle::pairwise_gap_scan(g);
            worst_sup = std::max(worst_sup, sup);
            worst_len = std::max(worst_len, len);
            min_gap = std::min(min_gap, gap);
            out.require(sup <= 0.01, entry.name + " sup change " + num(sup));
            out.require(len <= 0.01, entry.name + " length change " + num(len));
            out.require(gap > 0.0, entry.name + " has a repeated eigenvalue");
            if (row_is_simple(entry.homotopy, entry.homotopy.rows() - 1)) {
                const std::size_t last = g.rows() - 1;
                bool same = true;
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    same = same && g.at(last, l) == entry.homotopy.at(last, l);
                }
                out.require(same, entry.name + " end row moved");
                pinned += same ? 1 : 0;
            }
        } catch (const Error &err) {
            out.require(false, entry.name + " raised " + err.what());
        }
    }
    out.require(pinned >= 10, "only " + std::to_string(pinned) + " pinned end rows");
    if (out.pass) {
        out.detail << "20/20: sup change <= " << num(worst_sup, 4) << ", length change <= "
                   << num(worst_len, 3) << ", min gap " << num(min_gap, 3) << ", " << pinned
                   << " end rows pinned exactly";
    }
    return out;
}

Outcome tracking_consistency(const SuiteOptions &o)
{
    Outcome out;
    auto corpus = adversarial_corpus(build_example_u(), 20, o.seed + 3, {60, 50});
    for (auto &entry : collision_corpus(20, o.seed + 4, {30, 30})) {
        corpus.push_back(std::move(entry));
    }
    TrackOptions topts;
    topts.threads = o.threads;
    double worst_consistency = 0.0;
    double worst_agreement = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < corpus.size(); ++e) {
        const auto &entry = corpus[e];
        PerturbOptions popts;
        popts.seed = o.seed + e;
        try {
            const auto g = perturb_to_simple_spectrum(entry.homotopy, 0.005, popts).homotopy;
            const auto branches = track_branches(g, topts);
            const auto refined = track_branches(bisect_s(g), topts);
            const double consistency = branch_consistency(branches, g);
            const double agreement = lift_agreement(branches, refined);
            const double length = homotopy_length(g);
            double longest = 0.0;
            for (std::size_t j = 0; j < branches.k; ++j) {
                longest = std::max(longest, branch_length(branches, j));
            }
            worst_consistency = std::max(worst_consistency, consistency);
            worst_agreement = std::max(worst_agreement, agreement);
            min_margin = std::min(min_margin, length + 1e-6 - longest);
            out.require(consistency < 1e-9, entry.name + " consistency " + num(consistency));
            out.require(agreement <= 1e-8, entry.name + " refinement disagreement " + num(agreement));
            out.require(longest <= length + 1e-6, entry.name + " branch longer than homotopy");
        } catch (const Error &err) {
            out.require(false, entry.name + " raised " + err.what());
        }
    }
    if (out.pass) {
        out.detail << corpus.size() << "/" << corpus.size() << ": consistency <= "
                   << num(worst_consistency, 3) << ", refinement agreement <= "
                   << num(worst_agreement, 3) << ", length margin >= " << num(min_margin, 3);
    }
    return out;
}

struct Criterion {
    int id;
    const char *name;
    double limit;
    std::function<Outcome(const SuiteOptions &)> run;
};

const std::vector<Criterion> &criteria()
{
    static const std::vector<Criterion> list{
        {1, "scalar", 5.0, scalar_formula},
        {2, "theta", 5.0, theta_isometry},
        {3, "weyl", 30.0, weyl_inequality},
        {4, "ex310", 60.0, example_bracket},
        {5, "adversarial", 300.0, adversarial_soundness},
        {6, "goodearl", 120.0, goodearl_stage},
        {7, "trend", 120.0, epsilon_trend},
        {8, "perturb", 120.0, perturbation_contract},
        {9, "tracking", 0.0, tracking_consistency},
    };
    return list;
}

} // namespace

const std::vector<std::string> &criterion_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &c : criteria()) {
            out.emplace_back(c.name);
        }
        return out;
    }();
    return names;
}

std::vector<CriterionResult> run_suite(const SuiteOptions &options)
{
    std::vector<const Criterion *> chosen;
    for (const auto &c : criteria()) {
        const bool wanted =
            options.subset.empty() ||
            std::any_of(options.subset.begin(), options.subset.end(), [&](const std::string &s) {
                return s == c.name || s == std::to_string(c.id);
            });
        if (wanted) {
            chosen.push_back(&c);
        }
    }
    for (const auto &s : options.subset) {
        const bool known = std::any_of(criteria().begin(), criteria().end(), [&](const Criterion &c) {
            return s == c.name || s == std::to_string(c.id);
        });
        CELEX_FAIL_IF(!known, ErrorCode::InvalidArgument, "unknown selftest criterion '" + s + "'");
    }

    std::vector<CriterionResult> results;
    for (const auto *c : chosen) {
        CriterionResult r;
        r.id = c->id;
        r.name = c->name;
        r.time_limit = c->limit;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome outcome = c->run(options);
            r.pass = outcome.pass;
            r.detail = outcome.detail.str();
        } catch (const std::exception &e) {
            r.pass = false;
            r.detail = std::string("FAILED: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.time_limit > 0.0 && r.seconds >= r.time_limit) {
            r.pass = false;
            r.detail += " [over the " + num(r.time_limit) + " s limit]";
        }
        results.push_back(std::move(r));
    }
    return results;
}

void print_results(const std::vector<CriterionResult> &results, std::ostream &out)
{
    for (const auto &r : results) {
        char head[96];
        std::snprintf(head, sizeof head, "[%s] %d %s (%.2f s", r.pass ? "PASS" : "FAIL", r.id,
                      r.name.c_str(), r.seconds);
        out << head;
        if (r.time_limit > 0.0) {
            out << ", limit " << num(r.time_limit) << " s";
        }
        out << "): " << r.detail << '\n';
    }
}

bool all_passed(const std::vector<CriterionResult> &results)
{
    return !results.empty() &&
           std::all_of(results.begin(), results.end(), [](const CriterionResult &r) { return r.pass; });
}

} // namespace celex::selftest
