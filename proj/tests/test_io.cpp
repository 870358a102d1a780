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

#include <gtest/gtest.h>

#include <random>

#include "qcrel/errors.hpp"
#include "qcrel/io.hpp"
#include "test_util.hpp"

namespace qcrel {
namespace {

using testing::rel;
using testing::state;

std::string error_of(std::string_view text) {
  try {
    parse_relation_text(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

TEST(GroupoidSpec, Examples) {
  const Groupoid a = parse_groupoid_spec("Z2^2");
  EXPECT_EQ(a, Groupoid(AbelianGroup::cyclic(2), 2));
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(parse_groupoid_spec("Z3"), Groupoid(AbelianGroup::cyclic(3), 1));
  const Groupoid c = parse_groupoid_spec("Z2xZ3^2");
  EXPECT_EQ(c.base().order(), 6u);
  EXPECT_EQ(c.copies(), 2u);
  EXPECT_EQ(groupoid_spec(c), "Z2xZ3^2");
}

TEST(GroupoidSpec, ErrorsCarryPosition) {
  for (const char* bad : {"", "Z", "Z2^", "Y2", "Z2x", "Z2^2^3", "Z2 ", "Z-1"}) {
    EXPECT_THROW(parse_groupoid_spec(bad), InvalidInput) << bad;
  }
  try {
    parse_groupoid_spec("Z2xQ3");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(parse_groupoid_spec("Z0"), InvalidInput);
  EXPECT_THROW(parse_groupoid_spec("Z2^0"), InvalidInput);
}

TEST(PairSpec, Parses) {
  const ComplementaryPair p = parse_pair_spec("pair(Z2,Z2)");
  EXPECT_EQ(p.to_string(), "pair(Z2,Z2)");
  EXPECT_EQ(parse_pair_spec("pair(Z3,Z1)").size(), 3u);
  EXPECT_EQ(parse_pair_spec("pair(Z2xZ2,Z2)").size(), 8u);
  EXPECT_THROW(parse_pair_spec("pair(Z2^2,Z2)"), InvalidInput);
  EXPECT_THROW(parse_pair_spec("pair(Z2,Z2"), InvalidInput);
}

TEST(RelationJson, ParsesIdentity) {
  EXPECT_EQ(parse_relation_text(R"({"dom":3,"cod":3,"pairs":[[0,0],[1,1],[2,2]]})"),
            identity(3));
}

TEST(RelationJson, DistinctErrors) {
  const std::string range = error_of(R"({"dom":3,"cod":3,"pairs":[[3,0]]})");
  const std::string dup = error_of(R"({"dom":3,"cod":3,"pairs":[[0,0],[0,0]]})");
  const std::string schema = error_of(R"({"dom":3,"pairs":[]})");
  const std::string shape = error_of(R"({"dom":3,"cod":3,"pairs":[[0]]})");
  const std::string syntax = error_of(R"({"dom":3,)");
  EXPECT_NE(range.find("out of range"), std::string::npos) << range;
  EXPECT_NE(dup.find("duplicate"), std::string::npos) << dup;
  EXPECT_NE(schema.find("schema"), std::string::npos) << schema;
  EXPECT_NE(shape.find("schema"), std::string::npos) << shape;
  EXPECT_NE(syntax.find("JSON"), std::string::npos) << syntax;
  EXPECT_NE(error_of(R"({"dom":-1,"cod":3,"pairs":[]})").find("schema"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dom":1,"cod":1,"pairs":[],"x":1})").find("schema"),
            std::string::npos);
}

TEST(RelationJson, SortedOutputAndRoundTrip) {
  const FinRel r = rel(3, 2, {{2, 1}, {0, 1}, {0, 0}});
  EXPECT_EQ(relation_to_json(r).dump(),
            R"({"dom":3,"cod":2,"pairs":[[0,0],[0,1],[2,1]]})");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FinRel x = testing::random_rel(rng, 1 + rng() % 5, 1 + rng() % 5);
    EXPECT_EQ(parse_relation_text(relation_to_json(x).dump()), x);
  }
}

TEST(OracleSpecJson, RoundTrip) {
  const ComplementaryPair p = parse_pair_spec("pair(Z2,Z2)");
  const OracleSpec spec(p.z(), p, StructuredRel(identity(4), p.z(), p.z()));
  const Json j = oracle_spec_to_json(spec);
  EXPECT_EQ(j.at("za"), "Z2^2");
  const OracleSpec back = oracle_spec_from_json(j);
  EXPECT_EQ(back.f(), spec.f());
  EXPECT_EQ(oracle_spec_to_json(back), j);
}

const ComplementaryPair kKlein(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2));

TEST(Report, RoundTripAllAlgorithms) {
  const FinRel f = rel(4, 4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}});
  const std::vector<RunReport> reports = {
      dj_run(DJInstance(kKlein, kKlein, f)),
      grover_run(GroverInstance(kKlein, kKlein, f, state(4, {1, 3}))),
      grouphomid_run(HomIDInstance(kKlein, kKlein, f, state(4, {0, 2})))};
  for (const RunReport& r : reports) {
    const Json j = report_to_json(r);
    EXPECT_EQ(report_from_json(j), r);
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), r);
    EXPECT_EQ(j.at("diagnostics").at("queries"), 1);
  }
}

TEST(Report, SchemaKeysInOrder) {
  const RunReport r = dj_run(DJInstance(
      kKlein, kKlein, rel(4, 4, {{0, 0}, {0, 1}, {2, 0}, {2, 1}})));
  const Json j = report_to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"algorithm", "instance", "decision",
                                            "possible_outcomes", "scalars",
                                            "diagnostics", "composites"}));
  EXPECT_TRUE(j.at("diagnostics").at("diffusion_unitary").is_null());
}

TEST(Report, HumanDecisionLine) {
  const RunReport r = dj_run(DJInstance(
      kKlein, kKlein, rel(4, 4, {{0, 0}, {0, 1}, {2, 0}, {2, 1}})));
  const std::string text = emit_report(r, OutputMode::kHuman);
  EXPECT_NE(text.find("decision: CONSTANT (scalar possible)\n"),
            std::string::npos)
      << text;
  const std::string json = emit_report(r, OutputMode::kJson);
  EXPECT_EQ(json.back(), '\n');
  EXPECT_EQ(json.find('\n'), json.size() - 1);
}

TEST(Report, HumanOutcomeTable) {
  const RunReport r = grover_run(GroverInstance(
      kKlein, kKlein, rel(4, 4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}}),
      state(4, {1, 3})));
  const std::string text = emit_report(r, OutputMode::kHuman);
  EXPECT_NE(text.find("possible outcomes: {1,3}"), std::string::npos) << text;
  EXPECT_NE(text.find("diffusion_unitary=yes"), std::string::npos) << text;
}

TEST(Report, MalformedRejected) {
  EXPECT_THROW(report_from_json(Json::parse(R"({"algorithm":"dj"})")),
               InvalidInput);
}

}  // namespace
}  // namespace qcrel
