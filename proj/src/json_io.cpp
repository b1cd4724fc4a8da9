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

#include "celex/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "celex/error.hpp"

namespace celex {

namespace {

void write_string(std::string &out, const std::string &s)
{
    // Reuse the library's escaping for strings.
    out += Json(s).dump();
}

void write_value(std::string &out, const Json &v, int indent, int level)
{
    const auto newline = [&](int lvl) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * lvl), ' ');
        }
    };
    switch (v.type()) {
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto &[key, item] : v.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(level + 1);
            write_string(out, key);
            out += indent >= 0 ? ": " : ":";
            write_value(out, item, indent, level + 1);
        }
        newline(level);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        const bool flat = std::all_of(v.begin(), v.end(), [](const Json &e) { return e.is_primitive(); });
        out += '[';
        bool first = true;
        for (const auto &item : v) {
            if (!first) {
                out += flat && indent >= 0 ? ", " : ",";
            }
            first = false;
            if (!flat) {
                newline(level + 1);
            }
            write_value(out, item, indent, level + 1);
        }
        if (!flat) {
            newline(level);
        }
        out += ']';
        return;
    }
    case Json::value_t::number_float: {
        const double d = v.get<double>() == 0.0 ? 0.0 : v.get<double>();
        CELEX_FAIL_IF(!std::isfinite(d), ErrorCode::NonFinite, "cannot serialize a non-finite number");
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.17g", d);
        out += buffer;
        return;
    }
    default:
        out += v.dump();
        return;
    }
}

template <typename T> T field(const Json &j, const char *key)
{
    CELEX_FAIL_IF(!j.is_object() || !j.contains(key), ErrorCode::ParseError,
                  std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

} // namespace

std::string dump_json(const Json &value, int indent)
{
    std::string out;
    write_value(out, value, indent, 0);
    out += '\n';
    return out;
}

Json family_json(const AffineAngleFamily &f, const Json &meta)
{
    Json terms = Json::array();
    for (const auto &term : f.terms) {
        terms.push_back({{"slope", term.slope}, {"intercept", term.intercept}, {"mult", term.mult}});
    }
    Json out{{"terms", terms}, {"meta", meta}};
    out["meta"]["L"] = f.total_size();
    out["meta"]["det_slope"] = f.det_slope();
    out["meta"]["det_intercept"] = f.det_intercept();
    return out;
}

AffineAngleFamily family_from_json(const Json &j)
{
    AffineAngleFamily f;
    for (const auto &term : field<Json>(j, "terms")) {
        const auto mult = field<std::uint64_t>(term, "mult");
        CELEX_FAIL_IF(mult == 0, ErrorCode::ParseError, "multiplicity must be positive");
        f.terms.push_back({field<double>(term, "slope"), field<double>(term, "intercept"), mult});
    }
    return f;
}

Json stage_json(const GoodearlStage &stage)
{
    Json out{{"levels", stage.levels}, {"points", stage.points}};
    out["eps"] = stage.eps ? Json(*stage.eps) : Json(nullptr);
    return out;
}

GoodearlStage stage_from_json(const Json &j)
{
    GoodearlStage stage;
    stage.levels = field<std::vector<int>>(j, "levels");
    if (j.contains("points") && !j.at("points").is_null()) {
        stage.points = field<std::vector<double>>(j, "points");
    } else {
        stage = GoodearlStage::with_default_points(stage.levels);
    }
    if (j.contains("eps") && !j.at("eps").is_null()) {
        stage.eps = field<double>(j, "eps");
    }
    stage.validate();
    return stage;
}

Json homotopy_json(const UnitaryHomotopy &f, const Json &meta)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t l = 0; l < f.cols(); ++l) {
            Json m = Json::array();
            const Matrix &a = f.at(i, l);
            for (Eigen::Index r = 0; r < f.n; ++r) {
                for (Eigen::Index c = 0; c < f.n; ++c) {
                    m.push_back(Json::array({a(r, c).real(), a(r, c).imag()}));
                }
            }
            row.push_back(std::move(m));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", f.n}, {"s_grid", f.s_grid}, {"t_grid", f.t_grid}, {"matrices", rows},
                {"meta", meta}};
}

UnitaryHomotopy homotopy_from_json(const Json &j)
{
    UnitaryHomotopy f;
    f.n = field<Eigen::Index>(j, "n");
    CELEX_FAIL_IF(f.n <= 0, ErrorCode::ParseError, "dimension must be positive");
    f.s_grid = field<std::vector<double>>(j, "s_grid");
    f.t_grid = field<std::vector<double>>(j, "t_grid");
    const auto &rows = j.at("matrices");
    CELEX_FAIL_IF(!rows.is_array() || rows.size() != f.rows(), ErrorCode::ParseError,
                  "matrices must have one row per s value");
    const auto entries = static_cast<std::size_t>(f.n * f.n);
    for (const auto &row : rows) {
        CELEX_FAIL_IF(!row.is_array() || row.size() != f.cols(), ErrorCode::ParseError,
                      "matrix rows must have one entry per t value");
        for (const auto &m : row) {
            CELEX_FAIL_IF(!m.is_array() || m.size() != entries, ErrorCode::ParseError,
                          "matrix must have n*n entries");
            Matrix a(f.n, f.n);
            for (std::size_t e = 0; e < entries; ++e) {
                const auto &z = m[e];
                CELEX_FAIL_IF(!z.is_array() || z.size() != 2 || !z[0].is_number() ||
                                  !z[1].is_number(),
                              ErrorCode::ParseError, "entries must be [re, im] pairs");
                a(static_cast<Eigen::Index>(e) / f.n, static_cast<Eigen::Index>(e) % f.n) = {
                    z[0].get<double>(), z[1].get<double>()};
            }
            f.matrices.push_back(std::move(a));
        }
    }
    f.validate();
    return f;
}

Json certificate_json(const CelCertificate &cert)
{
    Json slack = Json::array();
    for (const auto &item : cert.slack) {
        slack.push_back({{"name", item.name}, {"value", item.value}});
    }
    Json out{{"schema_version", kCertificateSchemaVersion},
             {"target", cert.target},
             {"lower_bound", cert.lower_bound}};
    out["upper_bound"] = cert.upper_bound ? Json(*cert.upper_bound) : Json(nullptr);
    out["slack"] = slack;
    out["provenance"] = cert.provenance;
    out["seed"] = cert.seed;
    out["grids"] = {{"s", cert.grid.s_points}, {"t", cert.grid.t_points}};
    out["diagnostics"] = {{"displacement", cert.displacement},
                          {"length", cert.homotopy_length},
                          {"perturbed_length", cert.perturbed_length},
                          {"branch", cert.branch},
                          {"candidates", cert.candidates},
                          {"gap", cert.gap},
                          {"substeps", cert.substeps}};
    return out;
}

Json read_json_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    CELEX_FAIL_IF(!in, ErrorCode::ParseError, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    CELEX_FAIL_IF(!out, ErrorCode::InvalidArgument, "cannot write " + path.string());
    out << text;
}

} // namespace celex
