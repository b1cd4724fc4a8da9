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

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "celex/certify.hpp"
#include "celex/family.hpp"
#include "celex/goodearl.hpp"
#include "celex/homotopy.hpp"

namespace celex {

using Json = nlohmann::ordered_json;

/// Serializes with every double printed to 17 significant digits, so equal
/// inputs give byte-identical text and values read back exactly.
[[nodiscard]] std::string dump_json(const Json &value, int indent = 2);

[[nodiscard]] Json family_json(const AffineAngleFamily &f, const Json &meta = Json::object());
[[nodiscard]] AffineAngleFamily family_from_json(const Json &j);

[[nodiscard]] Json stage_json(const GoodearlStage &stage);
[[nodiscard]] GoodearlStage stage_from_json(const Json &j);

/// {n, s_grid, t_grid, matrices, meta}; each matrix is n·n row-major [re, im].
[[nodiscard]] Json homotopy_json(const UnitaryHomotopy &f, const Json &meta = Json::object());
[[nodiscard]] UnitaryHomotopy homotopy_from_json(const Json &j);

[[nodiscard]] Json certificate_json(const CelCertificate &cert);

/// Throws ParseError.
[[nodiscard]] Json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace celex
