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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expected values come from the worked examples and the
// published classification tables, never from this library's own output.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qcrel/algorithms.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/io.hpp"
#include "qcrel/oracle.hpp"
#include "qcrel/relation.hpp"
#include "qcrel/structmaps.hpp"

namespace {

using namespace qcrel;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

FinRel rel(std::size_t n, std::vector<IndexPair> pairs) {
  return FinRel(n, n, std::move(pairs));
}

const ComplementaryPair& klein_pair() {
  static const ComplementaryPair p(AbelianGroup::cyclic(2),
                                   AbelianGroup::cyclic(2));
  return p;
}

std::vector<FinRel> sorted(std::vector<FinRel> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Published tables, labels a..d read as 0..3.
const std::vector<FinRel>& table_z3() {
  static const std::vector<FinRel> t = {
      rel(3, {{0, 0}, {0, 1}, {0, 2}}),
      rel(3, {{0, 0}, {1, 1}, {2, 2}}),
      rel(3, {{0, 0}, {1, 2}, {2, 1}})};
  return t;
}

const std::vector<FinRel>& table_z4() {
  static const std::vector<FinRel> t = {
      rel(4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}),
      rel(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
      rel(4, {{0, 0}, {2, 1}, {0, 2}, {2, 3}}),
      rel(4, {{0, 0}, {3, 1}, {2, 2}, {1, 3}})};
  return t;
}

const std::vector<FinRel>& table_klein() {
  static const std::vector<FinRel> t = {
      rel(4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}}),
      rel(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
      rel(4, {{0, 2}, {2, 2}, {1, 3}, {2, 3}}),
      rel(4, {{0, 0}, {1, 1}, {2, 2}, {2, 3}}),
      rel(4, {{0, 2}, {2, 2}, {0, 3}, {3, 3}}),
      rel(4, {{0, 0}, {0, 1}, {2, 2}, {3, 3}}),
      rel(4, {{0, 2}, {2, 2}, {0, 3}, {2, 3}}),
      rel(4, {{0, 0}, {0, 1}, {2, 2}, {2, 3}}),
      rel(4, {{2, 0}, {3, 1}, {0, 2}, {1, 3}}),
      rel(4, {{0, 0}, {2, 0}, {1, 1}, {3, 1}}),
      rel(4, {{2, 0}, {3, 1}, {0, 2}, {0, 3}}),
      rel(4, {{0, 0}, {2, 0}, {1, 1}, {2, 1}}),
      rel(4, {{2, 0}, {2, 1}, {0, 2}, {1, 3}}),
      rel(4, {{0, 0}, {2, 0}, {0, 1}, {3, 1}}),
      rel(4, {{2, 0}, {2, 1}, {0, 2}, {0, 3}}),
      rel(4, {{0, 0}, {2, 0}, {0, 1}, {2, 1}})};
  return t;
}

const Groupoid kZ3(AbelianGroup::cyclic(3), 1);
const Groupoid kZ4(AbelianGroup::cyclic(4), 1);
const Groupoid kKlein(AbelianGroup::cyclic(2), 2);

Outcome criterion_1() {
  Outcome o;
  const FinRel r = rel(3, {{0, 0}, {0, 2}, {1, 1}});
  const StateVec psi(3, {0});
  o.require(apply(r, psi) == StateVec(3, {0, 2}), "image of {0} is not {0,2}");
  o.require(then(psi.as_state(), r) == StateVec(3, {0, 2}).as_state(),
            "composite state is not (1,0,1)");
  return o;
}

Outcome criterion_2() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Groupoid g(AbelianGroup::cyclic(k), n);
      o.require(verify_classical_structure(g).all(),
                groupoid_spec(g) + " fails a law");
    }
  }
  const Groupoid z2(AbelianGroup::cyclic(2), 1);
  const FinRel m = mult_rel(z2);
  std::vector<IndexPair> mutated(m.pairs().begin(), m.pairs().end());
  mutated.pop_back();
  const ClassicalLaws laws = verify_frobenius_laws(
      FinRel(m.dom(), m.cod(), mutated), unit_rel(z2).as_state());
  o.require(!laws.all(), "mutated multiplication passes every law");
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (std::size_t g = 1; g <= 4; ++g) {
    for (std::size_t h = 1; h <= 4; ++h) {
      const ComplementaryPair p(AbelianGroup::cyclic(g), AbelianGroup::cyclic(h));
      o.require(is_unitary(cnot(p)), p.to_string() + " cnot not unitary");
    }
  }
  const std::vector<Index> id = {0, 1, 2, 3};
  o.require(!is_complementary(Groupoid(AbelianGroup::cyclic(4), 1),
                              Groupoid(AbelianGroup::cyclic(2), 2), id),
            "Z4 vs two copies of Z2 reported complementary");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  o.require(enumerate_classical_relations(kZ3, kZ3) == sorted(table_z3()),
            "Z3 -> Z3 table mismatch");
  o.require(enumerate_classical_relations(kZ4, kZ4) == sorted(table_z4()),
            "Z4 -> Z4 table mismatch");
  o.require(
      enumerate_classical_relations(kKlein, kKlein) == sorted(table_klein()),
      "Z2+Z2 table mismatch");
  return o;
}

std::size_t lemma_counterexamples(const Groupoid& g, std::string& first) {
  const std::size_t n = g.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    std::vector<IndexPair> pairs;
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (mask >> (a * n + b) & 1) pairs.emplace_back(a, b);
      }
    }
    const StructuredRel s(FinRel(n, n, std::move(pairs)), g, g);
    if (is_groupoid_hom_relation(s) && is_surjective_on_objects(s) &&
        !is_monoid_hom_relation(s)) {
      if (count++ == 0) first = to_string(s.rel());
    }
  }
  return count;
}

Outcome criterion_5() {
  Outcome o;
  for (const Groupoid* g : {&kZ3, &kKlein}) {
    std::string first;
    const std::size_t bad = lemma_counterexamples(*g, first);
    o.require(bad == 0, groupoid_spec(*g) + ": " + std::to_string(bad) +
                            " counterexamples, first " + first);
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  for (const Groupoid* g : {&kZ3, &kZ4, &kKlein}) {
    for (const FinRel& f : enumerate_classical_relations(*g, *g)) {
      o.require(is_self_conjugate(StructuredRel(f, *g, *g)),
                to_string(f) + " not self-conjugate");
    }
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const ComplementaryPair& p = klein_pair();
  for (const FinRel& f : enumerate_classical_relations(kKlein, kKlein)) {
    const FinRel oracle =
        build_oracle(OracleSpec(p.z(), p, StructuredRel(f, p.z(), p.z())));
    o.require(oracle.dom() == 16 && is_unitary(oracle),
              to_string(f) + " oracle not a bijection on 16 elements");
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const ComplementaryPair& p = klein_pair();
  const std::vector<FinRel> constant = {
      rel(4, {{0, 0}, {0, 1}, {2, 0}, {2, 1}}),
      rel(4, {{0, 2}, {0, 3}, {2, 2}, {2, 3}})};
  const std::vector<FinRel> balanced = {
      rel(4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}}),
      rel(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}),
      rel(4, {{2, 0}, {3, 1}, {0, 2}, {1, 3}}),
      rel(4, {{0, 0}, {2, 0}, {1, 1}, {3, 1}})};
  for (const FinRel& f : constant) {
    const DJInstance inst(p, p, f);
    const RunReport r = dj_run(inst);
    o.require(r.scalar("decision") == true && r.decision == "CONSTANT" &&
                  dj_classify(inst) == DJClass::kConstant,
              to_string(f) + " not reported constant");
  }
  for (const FinRel& f : balanced) {
    const DJInstance inst(p, p, f);
    const RunReport r = dj_run(inst);
    o.require(r.scalar("decision") == false && r.decision == "BALANCED" &&
                  dj_classify(inst) == DJClass::kBalanced,
              to_string(f) + " not reported balanced");
  }
  std::vector<FinRel> seen_constant, seen_balanced;
  for (const FinRel& f : enumerate_classical_relations(kKlein, kKlein)) {
    const DJInstance inst(p, p, f);
    const DJClass cls = dj_classify(inst);
    const RunReport r = dj_run(inst);
    o.require(oracle_query_count(r) == 1, "query count is not 1");
    if (cls == DJClass::kNeither) continue;
    (cls == DJClass::kConstant ? seen_constant : seen_balanced).push_back(f);
    o.require(r.decision == to_string(cls),
              to_string(f) + ": runner " + r.decision + " vs classifier " +
                  to_string(cls));
  }
  o.require(sorted(seen_constant) == sorted(constant),
            "constant class differs from the two listed relations");
  o.require(sorted(seen_balanced) == sorted(balanced),
            "balanced class differs from the four listed relations");
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const ComplementaryPair& p = klein_pair();
  const Diffusion d = grover_diffusion(p);
  o.require(d.rel == rel(4, {{1, 1}, {3, 3}, {0, 2}, {2, 0}}) && d.unitary,
            "diffusion is not the listed bijection");

  const StateVec sigma(4, {1, 3});
  const std::vector<StateVec> expected = {StateVec(4, {1, 3})};
  const FinRel first = rel(4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}});
  const FinRel second = rel(4, {{0, 0}, {2, 0}, {0, 1}, {2, 1}});
  for (const FinRel& f : {first, second}) {
    const RunReport r = grover_run(GroverInstance(p, p, f, sigma));
    std::string got;
    for (const StateVec& s : r.possible_outcomes) got += to_string(s);
    o.require(r.possible_outcomes == expected,
              to_string(f) + ": outcomes " + (got.empty() ? "none" : got) +
                  ", expected {1,3}");
  }

  std::size_t violations = 0;
  std::string example;
  for (const FinRel& f : enumerate_classical_relations(kKlein, kKlein)) {
    const GroverInstance inst(p, p, f, sigma);
    const RunReport r = grover_run(inst);
    const auto rhos = p.x_classical();
    for (std::size_t k = 0; k < rhos.size(); ++k) {
      const bool possible = !r.composites[k].empty();
      if (possible && grover_zero_condition(inst, rhos[k])) {
        if (violations++ == 0) {
          example = to_string(f) + " rho " + to_string(rhos[k]);
        }
      }
    }
  }
  o.require(violations == 0,
            "zero-condition contrapositive: " + std::to_string(violations) +
                " violations, first " + example);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const ComplementaryPair& p = klein_pair();
  const RunReport r =
      grouphomid_run(HomIDInstance(p, p, identity(4), StateVec(4, {0, 2})));
  o.require(r.possible_outcomes == p.x_classical(),
            "identity isomorphism: " +
                std::to_string(r.possible_outcomes.size()) + " of " +
                std::to_string(p.x_classical().size()) + " states possible");

  // Necessity over every enumerated family: Z3 and Z4 through pair(Zn,Z1),
  // two copies of Z2 through pair(Z2,Z2).
  const std::vector<ComplementaryPair> pairs = {
      ComplementaryPair(AbelianGroup::cyclic(3), AbelianGroup::cyclic(1)),
      ComplementaryPair(AbelianGroup::cyclic(4), AbelianGroup::cyclic(1)),
      p};
  for (const ComplementaryPair& q : pairs) {
    std::size_t violations = 0;
    std::string example;
    for (const FinRel& f : enumerate_classical_relations(q.z(), q.z())) {
      for (const StateVec& sigma : q.x_classical()) {
        const HomIDInstance inst(q, q, f, sigma);
        for (const StateVec& rho : grouphomid_run(inst).possible_outcomes) {
          if (!grouphomid_necessary(inst, rho) && violations++ == 0) {
            example = to_string(f) + " sigma " + to_string(sigma) + " rho " +
                      to_string(rho);
          }
        }
      }
    }
    o.require(violations == 0, "necessity on " + q.to_string() + ": " +
                                   std::to_string(violations) +
                                   " violations, first " + example);
  }
  return o;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured run_command(const std::string& cmd) {
  Captured c;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    c.out.append(buf.data(), n);
  }
  c.status = pclose(pipe.release());
  return c;
}

Outcome criterion_11(const std::string& cli) {
  Outcome o;
  if (cli.empty() || !std::filesystem::exists(cli)) {
    o.require(false, "command-line tool not found: " + cli);
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path() / "qcrel_acceptance";
  std::filesystem::create_directories(dir);
  const auto oracle = dir / "oracle.json";
  std::ofstream(oracle) << R"({"dom":4,"cod":4,"pairs":[[0,2],[2,2],[1,3],[3,3]]})";

  const std::string o_arg = " --oracle " + oracle.string();
  const std::vector<std::string> commands = {
      " enumerate --from Z2^2 --to Z2^2",
      " enumerate --from Z1^3 --to Z1^4",
      " --json dj --pairA 'pair(Z2,Z2)' --pairB 'pair(Z2,Z2)'" + o_arg,
      " dj --pairA 'pair(Z2,Z2)' --pairB 'pair(Z2,Z2)'" + o_arg,
      " --json grover --pairS 'pair(Z2,Z2)' --pairB 'pair(Z2,Z2)' --sigma 1" +
          o_arg,
      " --json homid --pairS 'pair(Z2,Z2)' --pairB 'pair(Z2,Z2)' --sigma 0" +
          o_arg,
      " verify-structure --groupoid Z2^2",
  };
  for (const std::string& args : commands) {
    std::string reference;
    bool first = true;
    for (const char* threads : {"1", "1", "2", "4", "7"}) {
      const Captured c = run_command(std::string("QCREL_THREADS=") + threads +
                                     " '" + cli + "'" + args);
      o.require(c.status == 0, args + " exited with " + std::to_string(c.status));
      if (first) {
        reference = c.out;
        first = false;
        o.require(!reference.empty(), args + " produced no output");
      } else {
        o.require(c.out == reference,
                  args + " output differs with QCREL_THREADS=" + threads);
      }
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"example image of a state", criterion_1},
       {"classical structure laws", criterion_2},
       {"complementarity via cnot", criterion_3},
       {"classical relation tables", criterion_4},
       {"hom relation lemma", criterion_5},
       {"self-conjugacy", criterion_6},
       {"oracle unitarity", criterion_7},
       {"deutsch-jozsa", criterion_8},
       {"single-shot grover", criterion_9},
       {"homomorphism identification", criterion_10},
       {"cli determinism", [&] { return criterion_11(cli); }}};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " "
              << criteria[i].first;
    if (!o.pass) {
      ++failed;
      std::cout << " --";
      for (const std::string& n : o.notes) std::cout << " [" << n << "]";
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
