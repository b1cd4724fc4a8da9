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

#include <filesystem>

#include "celex/certify.hpp"
#include "celex/error.hpp"
#include "celex/family.hpp"
#include "celex/goodearl.hpp"
#include "celex/json_io.hpp"

using namespace celex;

TEST_SUITE("json")
{
    TEST_CASE("family round trip is exact")
    {
        const auto f = build_u_eps(0.0037);
        const auto back = family_from_json(Json::parse(dump_json(family_json(f))));
        CHECK(back.terms == f.terms);
        CHECK(dump_json(family_json(back)) == dump_json(family_json(f)));
    }

    TEST_CASE("stage round trip")
    {
        const auto stage = GoodearlStage::with_default_points({2, 3}, 0.004);
        const auto back = stage_from_json(Json::parse(dump_json(stage_json(stage))));
        CHECK(back.levels == stage.levels);
        CHECK(back.points == stage.points);
        CHECK(back.eps == stage.eps);
    }

    TEST_CASE("homotopy round trip is exact")
    {
        const auto f = family_geodesic_homotopy(build_example_u(), {4, 5});
        const auto text = dump_json(homotopy_json(f));
        const auto back = homotopy_from_json(Json::parse(text));
        REQUIRE(back.matrices.size() == f.matrices.size());
        CHECK(back.s_grid == f.s_grid);
        CHECK(back.t_grid == f.t_grid);
        for (std::size_t i = 0; i < f.matrices.size(); ++i) {
            CHECK((back.matrices[i] - f.matrices[i]).norm() == 0.0);
        }
        CHECK(dump_json(homotopy_json(back)) == text);
    }

    TEST_CASE("certificate output is deterministic")
    {
        CertifyOptions options;
        options.seed = 5;
        const auto a = dump_json(certificate_json(example_u_certificate({30, 30}, options)));
        const auto b = dump_json(certificate_json(example_u_certificate({30, 30}, options)));
        CHECK(a == b);
        const auto j = Json::parse(a);
        CHECK(j["schema_version"] == kCertificateSchemaVersion);
        CHECK(j["lower_bound"].get<double>() <= j["upper_bound"].get<double>());
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS((void)family_from_json(Json::parse(R"({"terms": 3})")), Error);
        CHECK_THROWS_AS((void)homotopy_from_json(Json::parse(R"({"n": 2})")), Error);
        const auto path = std::filesystem::temp_directory_path() / "celex_bad.json";
        write_text_file(path, "{ not json");
        try {
            (void)read_json_file(path);
            FAIL("expected ParseError");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
        std::filesystem::remove(path);
        CHECK_THROWS_AS((void)read_json_file(path), Error);
    }
}
