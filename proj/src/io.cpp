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

#include "qcrel/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "qcrel/errors.hpp"

namespace qcrel {

namespace {

// Recursive-descent reader over a spec string; every error names the
// offending position.
class SpecReader {
 public:
  SpecReader(std::string_view text, std::string_view what)
      : text_(text), what_(what) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("malformed " + std::string(what_) + " '" +
                       std::string(text_) + "' at position " +
                       std::to_string(pos_) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::size_t number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::invalid_argument || ptr == begin) {
      fail("expected a number");
    }
    if (ec == std::errc::result_out_of_range || value > kMaxSetSize) {
      fail("number too large");
    }
    const std::size_t start = pos_;
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (value == 0) {
      pos_ = start;
      fail("order and copy count must be at least 1");
    }
    return value;
  }

  AbelianGroup group() {
    std::vector<std::size_t> orders;
    do {
      expect('Z');
      orders.push_back(number());
    } while (accept('x'));
    return AbelianGroup(std::move(orders));
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing characters");
  }

 private:
  std::string_view text_;
  std::string_view what_;
  std::size_t pos_ = 0;
};

[[noreturn]] void schema_error(const std::string& msg) {
  throw InvalidInput("relation schema violation: " + msg);
}

std::size_t read_size(const Json& j, const char* key) {
  if (!j.contains(key)) schema_error(std::string("missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) {
    schema_error(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  const auto n = v.get<std::uint64_t>();
  if (n > kMaxSetSize) schema_error(std::string("\"") + key + "\" too large");
  return static_cast<std::size_t>(n);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AbelianGroup parse_group_spec(std::string_view text) {
  SpecReader reader(text, "group spec");
  AbelianGroup g = reader.group();
  reader.finish();
  return g;
}

Groupoid parse_groupoid_spec(std::string_view text) {
  SpecReader reader(text, "groupoid spec");
  AbelianGroup g = reader.group();
  std::size_t copies = 1;
  if (reader.accept('^')) copies = reader.number();
  reader.finish();
  if (copies * g.order() > kMaxSetSize) reader.fail("groupoid too large");
  return Groupoid(std::move(g), copies);
}

ComplementaryPair parse_pair_spec(std::string_view text) {
  SpecReader reader(text, "pair spec");
  for (char c : std::string_view("pair(")) reader.expect(c);
  AbelianGroup g = reader.group();
  reader.expect(',');
  AbelianGroup h = reader.group();
  reader.expect(')');
  reader.finish();
  if (g.order() * h.order() > kMaxSetSize) reader.fail("pair too large");
  return ComplementaryPair(std::move(g), std::move(h));
}

std::string groupoid_spec(const Groupoid& g) {
  return g.base().to_string() + "^" + std::to_string(g.copies());
}

Json relation_to_json(const FinRel& r) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back({a, b});
  return Json{{"dom", r.dom()}, {"cod", r.cod()}, {"pairs", std::move(pairs)}};
}

FinRel relation_from_json(const Json& j) {
  if (!j.is_object()) schema_error("expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "dom" && key != "cod" && key != "pairs") {
      schema_error("unknown key \"" + key + "\"");
    }
  }
  const std::size_t dom = read_size(j, "dom");
  const std::size_t cod = read_size(j, "cod");
  if (!j.contains("pairs") || !j.at("pairs").is_array()) {
    schema_error("\"pairs\" must be an array");
  }
  std::vector<IndexPair> pairs;
  for (const Json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned()) {
      schema_error("each pair must be [a, b] with nonnegative integers");
    }
    const auto a = p[0].get<std::uint64_t>();
    const auto b = p[1].get<std::uint64_t>();
    if (a >= dom || b >= cod) {
      throw InvalidInput("pair [" + std::to_string(a) + "," +
                         std::to_string(b) + "] out of range for " +
                         std::to_string(dom) + "x" + std::to_string(cod));
    }
    pairs.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
  }
  std::vector<IndexPair> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvalidInput("duplicate pair [" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + "]");
  }
  return FinRel(dom, cod, std::move(sorted));
}

FinRel parse_relation_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("relation is not valid JSON: ") + e.what());
  }
  return relation_from_json(j);
}

FinRel parse_relation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open relation file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_relation_text(buffer.str());
}

Json state_to_json(const StateVec& s) {
  Json members = Json::array();
  for (Index i : s.members()) members.push_back(i);
  return Json{{"space", s.space_size()}, {"members", std::move(members)}};
}

StateVec state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("members") ||
      !j.at("members").is_array()) {
    throw InvalidInput("state must be {\"space\": n, \"members\": [...]}");
  }
  try {
    return StateVec(j.at("space").get<std::size_t>(),
                    j.at("members").get<std::vector<Index>>());
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed state: ") + e.what());
  }
}

Json oracle_spec_to_json(const OracleSpec& spec) {
  return Json{{"za", groupoid_spec(spec.za())},
              {"pair_b", spec.pair_b().to_string()},
              {"f", relation_to_json(spec.f().rel())}};
}

OracleSpec oracle_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("za") || !j.contains("pair_b") ||
      !j.contains("f") || !j.at("za").is_string() ||
      !j.at("pair_b").is_string()) {
    throw InvalidInput(
        "oracle spec must be {\"za\": spec, \"pair_b\": spec, \"f\": relation}");
  }
  Groupoid za = parse_groupoid_spec(j.at("za").get<std::string>());
  ComplementaryPair pb = parse_pair_spec(j.at("pair_b").get<std::string>());
  StructuredRel f(relation_from_json(j.at("f")), za, pb.z());
  return OracleSpec(std::move(za), std::move(pb), std::move(f));
}

Json report_to_json(const RunReport& report) {
  Json instance{{"first_pair", report.instance.first_pair},
                {"second_pair", report.instance.second_pair},
                {"oracle", relation_to_json(report.instance.oracle)}};
  instance["sigma"] = report.instance.sigma
                          ? state_to_json(*report.instance.sigma)
                          : Json(nullptr);

  Json outcomes = Json::array();
  for (const StateVec& s : report.possible_outcomes) {
    outcomes.push_back(state_to_json(s));
  }
  Json scalars = Json::object();
  for (const auto& [name, value] : report.scalars) scalars[name] = value;

  const RunDiagnostics& d = report.diagnostics;
  Json diagnostics{{"diffusion_unitary", d.diffusion_unitary
                                             ? Json(*d.diffusion_unitary)
                                             : Json(nullptr)},
                   {"oracle_unitary", d.oracle_unitary},
                   {"queries", d.queries},
                   {"physical", d.physical}};

  Json composites = Json::array();
  for (const FinRel& c : report.composites) {
    composites.push_back(relation_to_json(c));
  }
  return Json{{"algorithm", to_string(report.algorithm)},
              {"instance", std::move(instance)},
              {"decision", report.decision},
              {"possible_outcomes", std::move(outcomes)},
              {"scalars", std::move(scalars)},
              {"diagnostics", std::move(diagnostics)},
              {"composites", std::move(composites)}};
}

RunReport report_from_json(const Json& j) {
  try {
    RunReport r;
    r.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
    const Json& inst = j.at("instance");
    r.instance.first_pair = inst.at("first_pair").get<std::string>();
    r.instance.second_pair = inst.at("second_pair").get<std::string>();
    r.instance.oracle = relation_from_json(inst.at("oracle"));
    if (!inst.at("sigma").is_null()) {
      r.instance.sigma = state_from_json(inst.at("sigma"));
    }
    r.decision = j.at("decision").get<std::string>();
    for (const Json& s : j.at("possible_outcomes")) {
      r.possible_outcomes.push_back(state_from_json(s));
    }
    for (const auto& [name, value] : j.at("scalars").items()) {
      r.scalars.emplace_back(name, value.get<bool>());
    }
    const Json& d = j.at("diagnostics");
    if (!d.at("diffusion_unitary").is_null()) {
      r.diagnostics.diffusion_unitary = d.at("diffusion_unitary").get<bool>();
    }
    r.diagnostics.oracle_unitary = d.at("oracle_unitary").get<bool>();
    r.diagnostics.queries = d.at("queries").get<int>();
    r.diagnostics.physical = d.at("physical").get<bool>();
    for (const Json& c : j.at("composites")) {
      r.composites.push_back(relation_from_json(c));
    }
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string emit_report(const RunReport& report, OutputMode mode) {
  if (mode == OutputMode::kJson) return report_to_json(report).dump() + "\n";

  std::ostringstream out;
  const InstanceSummary& inst = report.instance;
  out << "algorithm: " << to_string(report.algorithm) << "\n";
  out << "pairs: " << inst.first_pair << " -> " << inst.second_pair << "\n";
  out << "oracle relation: " << to_string(inst.oracle) << "\n";
  if (inst.sigma) out << "sigma: " << to_string(*inst.sigma) << "\n";

  if (report.algorithm == Algorithm::kDeutschJozsa) {
    const bool possible = report.scalar("decision").value_or(false);
    out << "decision: " << report.decision << " (scalar "
        << (possible ? "possible" : "impossible") << ")\n";
    for (const auto& [name, value] : report.scalars) {
      if (name == "decision") continue;
      out << "  " << std::left << std::setw(22) << name << yes_no(value)
          << "\n";
    }
  } else {
    out << "decision: " << report.decision << "\n";
    // Scalars are named "<outcome>.<column>"; pivot them into a table.
    std::vector<std::string> rows;
    std::vector<std::string> columns;
    std::map<std::pair<std::string, std::string>, bool> cells;
    for (const auto& [name, value] : report.scalars) {
      const auto dot = name.find('.');
      const std::string row = name.substr(0, dot);
      const std::string col =
          dot == std::string::npos ? "value" : name.substr(dot + 1);
      if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
        rows.push_back(row);
      }
      if (std::find(columns.begin(), columns.end(), col) == columns.end()) {
        columns.push_back(col);
      }
      cells[{row, col}] = value;
    }
    out << std::left << std::setw(10) << "outcome";
    for (const auto& c : columns) out << std::setw(c.size() + 2) << c;
    out << "\n";
    for (const auto& r : rows) {
      out << std::setw(10) << r;
      for (const auto& c : columns) {
        const auto it = cells.find({r, c});
        out << std::setw(c.size() + 2)
            << (it == cells.end() ? "-" : yes_no(it->second));
      }
      out << "\n";
    }
    out << "possible outcomes:";
    for (const StateVec& s : report.possible_outcomes) {
      out << " " << to_string(s);
    }
    out << "\n";
  }

  const RunDiagnostics& d = report.diagnostics;
  out << "diagnostics:";
  if (d.diffusion_unitary) {
    out << " diffusion_unitary=" << yes_no(*d.diffusion_unitary);
  }
  out << " oracle_unitary=" << yes_no(d.oracle_unitary)
      << " queries=" << d.queries << " physical=" << yes_no(d.physical)
      << "\n";
  if (!d.physical) out << "note: not a physical evolution in this model\n";
  return out.str();
}

}  // namespace qcrel
