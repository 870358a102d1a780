// Copyright 2026 The qcrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats shared by the command-line tool, the fixtures and the Python
// module. All JSON is emitted with a fixed key order and sorted pair lists,
// so identical values always serialize to identical bytes.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcrel/algorithms.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/oracle.hpp"
#include "qcrel/relation.hpp"

namespace qcrel {

using Json = nlohmann::ordered_json;

/// "Z<n>[xZ<m>...]" without a copy count.
AbelianGroup parse_group_spec(std::string_view text);
/// "Z<n>[xZ<m>...][^<k>]"; the copy count defaults to 1.
Groupoid parse_groupoid_spec(std::string_view text);
/// "pair(G,H)" naming the canonical complementary pair.
ComplementaryPair parse_pair_spec(std::string_view text);

/// Inverse of parse_groupoid_spec; always writes the copy count.
std::string groupoid_spec(const Groupoid& g);

Json relation_to_json(const FinRel& r);
/// Rejects schema violations, out-of-range pairs and duplicate pairs with
/// distinct messages.
FinRel relation_from_json(const Json& j);
FinRel parse_relation_text(std::string_view text);
FinRel parse_relation_file(const std::filesystem::path& path);

Json state_to_json(const StateVec& s);
StateVec state_from_json(const Json& j);

/// {"za": spec, "pair_b": "pair(G,H)", "f": relation}.
Json oracle_spec_to_json(const OracleSpec& spec);
OracleSpec oracle_spec_from_json(const Json& j);

Json report_to_json(const RunReport& report);
RunReport report_from_json(const Json& j);

enum class OutputMode { kHuman, kJson };

/// JSON mode: one compact line. Human mode: decision line, outcome table and
/// diagnostics.
std::string emit_report(const RunReport& report, OutputMode mode);

}  // namespace qcrel
