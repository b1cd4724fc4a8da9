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

// celex command-line front end: construct examples, certify bounds, inspect
// Goodearl stages and run the acceptance suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "celex/branches.hpp"
#include "celex/certify.hpp"
#include "celex/corpus.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/goodearl.hpp"
#include "celex/json_io.hpp"
#include "selftest/acceptance.hpp"

namespace {

using namespace celex;

constexpr int kExitInvalid = 2;
constexpr int kExitPipeline = 3;

struct RunConfig {
    std::string example;
    std::string input;
    std::string grid = "400x400";
    std::optional<double> eps;
    std::vector<int> levels;
    std::vector<double> points;
    int k = 2;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double delta = 0.005;
    std::string out;
    std::string branches_out;
    std::string format = "json";
    std::vector<std::string> subset;

    [[nodiscard]] Json to_json() const
    {
        Json j{{"example", example}, {"input", input}, {"grid", grid}};
        j["eps"] = eps ? Json(*eps) : Json(nullptr);
        j["levels"] = levels;
        j["points"] = points;
        j["k"] = k;
        j["seed"] = seed;
        j["threads"] = threads;
        j["delta"] = delta;
        j["format"] = format;
        return j;
    }
};

std::uint64_t default_seed()
{
    if (const char *env = std::getenv("CELEX_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw Error(ErrorCode::InvalidArgument, std::string("CELEX_SEED is not a number: ") + env);
        }
    }
    return 0;
}

GridSpec parse_grid(const std::string &text)
{
    const auto x = text.find('x');
    CELEX_FAIL_IF(x == std::string::npos, ErrorCode::InvalidArgument, "grid must look like SxT");
    try {
        std::size_t used_s = 0;
        std::size_t used_t = 0;
        const auto s = std::stoul(text.substr(0, x), &used_s);
        const auto t = std::stoul(text.substr(x + 1), &used_t);
        CELEX_FAIL_IF(used_s != x || used_t != text.size() - x - 1 || s < 2 || t < 2,
                      ErrorCode::InvalidArgument, "grid sizes must be integers >= 2");
        return {s, t};
    } catch (const std::logic_error &) {
        throw Error(ErrorCode::InvalidArgument, "grid must look like SxT");
    }
}

GoodearlStage stage_from(const RunConfig &cfg, double eps)
{
    GoodearlStage stage = cfg.points.empty() ? GoodearlStage::with_default_points(cfg.levels, eps)
                                             : GoodearlStage{cfg.levels, cfg.points, eps};
    stage.validate();
    return stage;
}

void emit(const RunConfig &cfg, const std::string &text)
{
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(cfg.out, text);
    }
}

CertifyOptions certify_options(const RunConfig &cfg)
{
    CertifyOptions o;
    o.seed = cfg.seed;
    o.threads = cfg.threads;
    o.delta = cfg.delta;
    return o;
}

std::string family_summary(const AffineAngleFamily &f)
{
    std::ostringstream os;
    os << "L=" << f.total_size() << " terms=" << f.terms.size() << " det_slope=" << f.det_slope()
       << " det_intercept=" << f.det_intercept();
    return os.str();
}

std::string sorted_curves_csv(const AffineAngleFamily &f, const GoodearlStage &stage,
                              const std::vector<double> &t_grid)
{
    const std::uint64_t a = stage.alpha();
    const std::uint64_t g = stage.gamma();
    const std::uint64_t size = stage.size();
    std::vector<std::uint64_t> ranks{1, g, g + 1, a, a + 1, size};
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::ostringstream os;
    os << "k,t,y\n";
    char line[96];
    for (const auto k : ranks) {
        if (k == 0 || k > size) {
            continue;
        }
        for (const double t : t_grid) {
            std::snprintf(line, sizeof line, "%llu,%.17g,%.17g\n",
                          static_cast<unsigned long long>(k), t, order_statistic(f, t, k));
            os << line;
        }
    }
    return os.str();
}

int cmd_construct(const RunConfig &cfg)
{
    const GridSpec grid = parse_grid(cfg.grid);
    const std::string &ex = cfg.example;
    Json meta{{"example", ex}, {"config", cfg.to_json()}};
    if (ex == "ex310" || ex == "u_eps" || ex == "near2pi") {
        const AffineAngleFamily f = ex == "ex310"   ? build_example_u()
                                    : ex == "u_eps" ? build_u_eps(cfg.eps.value_or(-1.0))
                                                    : near_2pi_family(cfg.k);
        std::cerr << ex << ": " << family_summary(f) << '\n';
        emit(cfg, dump_json(family_json(f, meta)));
        return 0;
    }
    if (ex == "goodearl") {
        const double eps = cfg.eps.value_or(0.005);
        const auto stage = stage_from(cfg, eps);
        const auto f = goodearl_image(build_u_eps(eps), stage);
        std::cerr << "goodearl: " << family_summary(f) << " alpha=" << stage.alpha()
                  << " beta=" << stage.beta() << " gamma=" << stage.gamma()
                  << " admissibility=" << stage.admissibility() << '\n';
        if (cfg.format == "csv") {
            emit(cfg, sorted_curves_csv(f, stage, uniform_grid(grid.t_points)));
        } else {
            meta["stage"] = stage_json(stage);
            meta["counts"] = {{"alpha", stage.alpha()}, {"beta", stage.beta()}, {"gamma", stage.gamma()}};
            emit(cfg, dump_json(family_json(f, meta)));
        }
        return 0;
    }
    if (ex == "homotopy" || ex == "detour") {
        const auto u = build_example_u();
        UnitaryHomotopy h;
        if (ex == "homotopy") {
            h = family_geodesic_homotopy(u, grid);
        } else {
            Rng rng(cfg.seed);
            h = detour_homotopy(u, random_hermitian(static_cast<Eigen::Index>(u.total_size()), rng),
                                1.0, grid);
        }
        meta["target"] = "ex310";
        std::cerr << ex << ": n=" << h.n << " grid=" << h.rows() << "x" << h.cols()
                  << " length=" << homotopy_length(h) << '\n';
        emit(cfg, dump_json(homotopy_json(h, meta)));
        return 0;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown example '" + ex + "'");
}

/// Target recorded in a homotopy file: "ex310", or {slope, intercept}.
TargetSpec target_from_meta(const Json &meta, Eigen::Index n)
{
    if (meta.contains("target")) {
        const auto &t = meta.at("target");
        if (t.is_string() && t.get<std::string>() == "ex310") {
            CELEX_FAIL_IF(n != 10, ErrorCode::DimensionMismatch, "ex310 target needs n = 10");
            return family_target(build_example_u(), 0, 0, "ex310");
        }
        if (t.is_object()) {
            const AngleTerm term{t.value("slope", 0.0), t.value("intercept", 0.0), 1};
            TargetSpec target;
            target.description = "input";
            target.terminal_angle = [term](double x) { return term.at(x); };
            target.slot = t.value("slot", std::size_t{0});
            return target;
        }
        throw Error(ErrorCode::ParseError, "unrecognized target in meta");
    }
    TargetSpec target;
    target.description = "input";
    target.terminal_angle = [](double) { return 0.0; };
    return target;
}

int cmd_certify(const RunConfig &cfg)
{
    const GridSpec grid = parse_grid(cfg.grid);
    CertifyOptions options = certify_options(cfg);
    BranchSet branches;
    options.branches = &branches;
    CelCertificate cert;
    if (!cfg.input.empty()) {
        const Json j = read_json_file(cfg.input);
        const auto h = homotopy_from_json(j);
        const Json meta = j.value("meta", Json::object());
        cert = certify_lower_bound(h, target_from_meta(meta, h.n), options);
        if (meta.contains("target") && meta.at("target") == "ex310") {
            cert.upper_bound = upper_bound_single_exponential(build_example_u());
        }
    } else if (cfg.example == "ex310") {
        cert = example_u_certificate(grid, options);
    } else if (cfg.example == "identity") {
        TargetSpec target;
        target.description = "identity";
        target.terminal_angle = [](double) { return 0.0; };
        target.upper_bound = 0.0;
        const auto h = constant_homotopy(Matrix::Identity(2, 2), uniform_grid(grid.s_points),
                                         uniform_grid(grid.t_points));
        cert = certify_lower_bound(h, target, options);
    } else if (cfg.example == "near2pi") {
        cert = near_2pi_example(cfg.k, grid, options).second;
    } else if (cfg.example == "goodearl") {
        const double eps = cfg.eps.value_or(0.005);
        cert = goodearl_certificate(stage_from(cfg, eps), eps, grid, options);
    } else {
        throw Error(ErrorCode::InvalidArgument,
                    "certify needs an example (ex310, identity, near2pi, goodearl) or --input");
    }
    if (cfg.format == "csv") {
        std::ostringstream os;
        write_branch_csv(branches, os);
        emit(cfg, os.str());
    } else {
        Json j = certificate_json(cert);
        j["config"] = cfg.to_json();
        emit(cfg, dump_json(j));
    }
    if (!cfg.branches_out.empty()) {
        std::ofstream os(cfg.branches_out);
        CELEX_FAIL_IF(!os, ErrorCode::InvalidArgument, "cannot write " + cfg.branches_out);
        write_branch_csv(branches, os);
    }
    std::cerr << "lower_bound=" << cert.lower_bound;
    if (cert.upper_bound) {
        std::cerr << " upper_bound=" << *cert.upper_bound;
    }
    std::cerr << " length=" << cert.homotopy_length << '\n';
    return 0;
}

int cmd_goodearl(const RunConfig &cfg)
{
    const GridSpec grid = parse_grid(cfg.grid);
    const double eps = cfg.eps.value_or(0.005);
    const auto stage = stage_from(cfg, eps);
    const auto image = goodearl_image(build_u_eps(eps), stage);
    const auto t_grid = uniform_grid(grid.t_points);
    const auto middle = check_middle_branch(image, stage, eps, t_grid);
    Json report{{"stage", stage_json(stage)},
                {"counts",
                 {{"alpha", stage.alpha()}, {"beta", stage.beta()}, {"gamma", stage.gamma()},
                  {"L", stage.size()}}},
                {"admissibility", stage.admissibility()},
                {"det_slope", image.det_slope()},
                {"det_intercept", image.det_intercept()}};
    Json witnesses = Json::array();
    for (const auto &w : middle.witnesses) {
        witnesses.push_back({{"t", w.t}, {"k", w.k}, {"reason", w.reason}});
    }
    report["middle_branch"] = {{"pass", middle.pass},
                               {"points", middle.points_checked},
                               {"max_below", middle.max_below},
                               {"max_above", middle.max_above},
                               {"witnesses", witnesses}};
    report["certificate"] = certificate_json(goodearl_certificate(stage, eps, grid, certify_options(cfg)));
    report["config"] = cfg.to_json();
    emit(cfg, dump_json(report));
    return 0;
}

int cmd_selftest(const RunConfig &cfg)
{
    selftest::SuiteOptions options;
    options.seed = cfg.seed;
    options.threads = cfg.threads;
    options.subset = cfg.subset;
    const auto results = selftest::run_suite(options);
    if (cfg.format == "json") {
        Json j = Json::array();
        for (const auto &r : results) {
            j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
                         {"detail", r.detail}});
        }
        emit(cfg, dump_json(j));
    } else {
        std::ostringstream os;
        selftest::print_results(results, os);
        emit(cfg, os.str());
    }
    return selftest::all_passed(results) ? 0 : 1;
}

bool is_parameter_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EpsOutOfRange:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InadmissibleStage:
    case ErrorCode::ParseError:
        return true;
    default:
        return false;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"celex: exponential length bounds for unitary paths"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI/TOML file of option defaults; flags take precedence");
    RunConfig cfg;
    try {
        cfg.seed = default_seed();
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--grid", cfg.grid, "grid size SxT")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "random seed (default: CELEX_SEED or 0)");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--out", cfg.out, "output file (default: stdout)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
    };
    auto add_stage = [&](CLI::App *sub) {
        sub->add_option("--eps", cfg.eps, "epsilon in (0, 0.01]");
        sub->add_option("--levels", cfg.levels, "stage exponents, e.g. 2,2")->delimiter(',');
        sub->add_option("--points", cfg.points, "evaluation points, e.g. 0.25,0.5")->delimiter(',');
    };

    auto *construct = app.add_subcommand("construct", "write an example family or homotopy");
    construct->add_option("example", cfg.example, "ex310 | u_eps | goodearl | near2pi | homotopy | detour")
        ->required();
    construct->add_option("--k", cfg.k, "exponent for near2pi")->capture_default_str();
    add_common(construct);
    add_stage(construct);

    auto *certify = app.add_subcommand("certify", "certify a lower bound for cel");
    certify->add_option("example", cfg.example, "ex310 | identity | near2pi | goodearl");
    certify->add_option("--input", cfg.input, "homotopy JSON file");
    certify->add_option("--k", cfg.k, "exponent for near2pi")->capture_default_str();
    certify->add_option("--delta", cfg.delta, "perturbation size")->capture_default_str();
    certify->add_option("--branches", cfg.branches_out, "also write branch lifts as CSV");
    add_common(certify);
    add_stage(certify);

    auto *goodearl = app.add_subcommand("goodearl", "inspect and certify a Goodearl stage");
    add_common(goodearl);
    add_stage(goodearl);

    auto *selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--subset", cfg.subset, "criteria by name or number")->delimiter(',');
    add_common(selftest);
    cfg.format = "text";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*construct) {
            try {
                return cmd_construct(cfg);
            } catch (const Error &e) {
                std::cerr << "error: " << e.what() << '\n';
                return kExitInvalid;
            }
        }
        if (*certify) {
            return cmd_certify(cfg);
        }
        if (*goodearl) {
            return cmd_goodearl(cfg);
        }
        return cmd_selftest(cfg);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_parameter_error(e.code()) ? kExitInvalid : kExitPipeline;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPipeline;
    }
}
