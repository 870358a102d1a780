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

// qcrel: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 a checked property is violated.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcrel/algorithms.hpp"
#include "qcrel/errors.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/io.hpp"
#include "qcrel/structmaps.hpp"

namespace {

using namespace qcrel;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolated = 2;

struct PairArg {
  std::string spec;
  std::string recode;  // optional comma-separated permutation
};

ComplementaryPair resolve_pair(const PairArg& arg) {
  ComplementaryPair canonical = parse_pair_spec(arg.spec);
  if (arg.recode.empty()) return canonical;
  std::vector<Index> perm;
  std::stringstream in(arg.recode);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      perm.push_back(static_cast<Index>(v));
    } catch (const std::exception&) {
      throw InvalidInput("recode entry '" + item + "' is not an index");
    }
  }
  ComplementaryPair recoded = ComplementaryPair::with_recode(
      canonical.g(), canonical.h(), std::move(perm));
  if (!is_complementary(recoded.z(), recoded.x(), recoded.x_recode())) {
    std::cerr << "warning: recode for " << arg.spec
              << " does not give complementary bases\n";
  }
  return recoded;
}

void add_pair_option(CLI::App* cmd, const std::string& name, PairArg& arg) {
  cmd->add_option("--" + name, arg.spec, "complementary pair, e.g. pair(Z2,Z2)")
      ->required();
  cmd->add_option("--recode" + name.substr(4), arg.recode,
                  "advanced: explicit Z-to-X recode permutation a,b,c,...");
}

const char* ok_fail(bool b) { return b ? "ok" : "FAIL"; }

int verify_structure(const std::string& spec, bool json) {
  const Groupoid g = parse_groupoid_spec(spec);
  const ClassicalLaws laws = verify_classical_structure(g);
  const std::vector<std::pair<std::string, bool>> rows = {
      {"coassociativity", laws.coassoc}, {"counitality", laws.counital},
      {"frobenius", laws.frobenius},     {"special", laws.special},
      {"symmetric", laws.symmetric}};
  if (json) {
    Json out{{"groupoid", groupoid_spec(g)}, {"size", g.size()}};
    Json j = Json::object();
    for (const auto& [name, ok] : rows) j[name] = ok;
    out["laws"] = std::move(j);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "groupoid " << groupoid_spec(g) << " (size " << g.size()
              << ")\n";
    for (const auto& [name, ok] : rows) {
      std::cout << "  " << name << ": " << ok_fail(ok) << "\n";
    }
  }
  return laws.all() ? kOk : kViolated;
}

int enumerate(const std::string& from, const std::string& to,
              std::uint64_t budget) {
  EnumerateOptions options;
  options.budget_bits = budget;
  const auto rels = enumerate_classical_relations(
      parse_groupoid_spec(from), parse_groupoid_spec(to), options);
  for (const FinRel& r : rels) std::cout << relation_to_json(r).dump() << "\n";
  return kOk;
}

int check_relation(const std::string& from, const std::string& to,
                   const std::string& path, bool json) {
  const StructuredRel s(parse_relation_file(path), parse_groupoid_spec(from),
                        parse_groupoid_spec(to));
  const RelationVerdicts v = check_all(s);
  const std::vector<std::pair<std::string, bool>> rows = {
      {"groupoid_hom", v.groupoid_hom},
      {"surjective_on_objects", v.surjective_on_objects},
      {"monoid_hom", v.monoid_hom},
      {"classical", v.classical},
      {"self_conjugate", v.self_conjugate}};
  if (json) {
    Json out{{"relation", relation_to_json(s.rel())}};
    for (const auto& [name, value] : rows) out[name] = value;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "relation " << to_string(s.rel()) << "\n";
    for (const auto& [name, value] : rows) {
      std::cout << "  " << name << ": " << (value ? "true" : "false") << "\n";
    }
  }
  // Classical relations are always self-conjugate; anything else is a bug.
  return v.classical && !v.self_conjugate ? kViolated : kOk;
}

StateVec sigma_state(const ComplementaryPair& pair, std::size_t index) {
  const auto states = pair.x_classical();
  if (index >= states.size()) {
    throw InvalidInput("--sigma " + std::to_string(index) +
                       " out of range: the X basis has " +
                       std::to_string(states.size()) + " classical states");
  }
  return states[index];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational quantum computation toolkit"};
  app.require_subcommand(1);

  bool json = false;
  bool unchecked = false;
  app.add_flag("--json", json, "emit JSON instead of human-readable text");

  std::string groupoid, from, to, rel_path, oracle_path;
  std::uint64_t budget = EnumerateOptions{}.budget_bits;
  std::size_t sigma = 0;
  PairArg first, second;

  auto* verify = app.add_subcommand("verify-structure",
                                    "check the classical-structure laws");
  verify->add_option("--groupoid", groupoid, "groupoid spec, e.g. Z2^2")
      ->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "list all classical relations");
  enumerate_cmd->add_option("--from", from)->required();
  enumerate_cmd->add_option("--to", to)->required();
  enumerate_cmd->add_option("--budget", budget,
                            "maximum log2 of the candidate space");

  auto* check = app.add_subcommand("check-relation",
                                   "evaluate the structure-map predicates");
  check->add_option("--from", from)->required();
  check->add_option("--to", to)->required();
  check->add_option("--rel", rel_path, "relation JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* dj = app.add_subcommand("dj", "Deutsch-Jozsa");
  add_pair_option(dj, "pairA", first);
  add_pair_option(dj, "pairB", second);

  auto* grover = app.add_subcommand("grover", "single-shot Grover");
  auto* homid =
      app.add_subcommand("homid", "groupoid homomorphism identification");
  for (auto* cmd : {grover, homid}) {
    add_pair_option(cmd, "pairS", first);
    add_pair_option(cmd, "pairB", second);
    cmd->add_option("--sigma", sigma,
                    "index of the classical X state prepared on B")
        ->required();
  }
  for (auto* cmd : {dj, grover, homid}) {
    cmd->add_option("--oracle", oracle_path, "relation JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--unchecked", unchecked,
                  "build the oracle even for non-classical relations");
  }
  for (auto* cmd : {verify, enumerate_cmd, check, dj, grover, homid}) {
    cmd->add_flag("--json", json, "emit JSON instead of human-readable text");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const OutputMode mode = json ? OutputMode::kJson : OutputMode::kHuman;
  const RunOptions options{.unchecked = unchecked};
  try {
    if (*verify) return verify_structure(groupoid, json);
    if (*enumerate_cmd) return enumerate(from, to, budget);
    if (*check) return check_relation(from, to, rel_path, json);
    const ComplementaryPair pa = resolve_pair(first);
    const ComplementaryPair pb = resolve_pair(second);
    const FinRel f = parse_relation_file(oracle_path);
    RunReport report;
    if (*dj) {
      report = dj_run(DJInstance(pa, pb, f), options);
    } else if (*grover) {
      report = grover_run(GroverInstance(pa, pb, f, sigma_state(pb, sigma)),
                          options);
    } else {
      report = grouphomid_run(HomIDInstance(pa, pb, f, sigma_state(pb, sigma)),
                              options);
    }
    std::cout << emit_report(report, mode);
    return kOk;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
