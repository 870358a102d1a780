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

#include "qcrel/algorithms.hpp"

#include <algorithm>

#include "qcrel/errors.hpp"

namespace qcrel {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kDeutschJozsa:
      return "dj";
    case Algorithm::kGrover:
      return "grover";
    case Algorithm::kHomId:
      return "homid";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "dj") return Algorithm::kDeutschJozsa;
  if (name == "grover") return Algorithm::kGrover;
  if (name == "homid") return Algorithm::kHomId;
  throw InvalidInput("unknown algorithm '" + name + "'");
}

std::string to_string(DJClass c) {
  switch (c) {
    case DJClass::kConstant:
      return "CONSTANT";
    case DJClass::kBalanced:
      return "BALANCED";
    case DJClass::kNeither:
      return "NEITHER";
  }
  return "NEITHER";
}

std::optional<bool> RunReport::scalar(const std::string& name) const {
  for (const auto& [key, value] : scalars) {
    if (key == name) return value;
  }
  return std::nullopt;
}

namespace {

enum class StageKind { kPrepare, kEvolve, kOracle, kMeasure };

// Composite built stage by stage; tracks oracle applications and whether
// every evolution stage is a bijection.
class Pipeline {
 public:
  explicit Pipeline(FinRel preparation) : composite_(std::move(preparation)) {}

  Pipeline& add(StageKind kind, const FinRel& stage) {
    if (kind == StageKind::kOracle) ++queries_;
    if ((kind == StageKind::kOracle || kind == StageKind::kEvolve) &&
        !is_unitary(stage)) {
      physical_ = false;
    }
    composite_ = then(composite_, stage);
    return *this;
  }

  const FinRel& composite() const { return composite_; }
  int queries() const { return queries_; }
  bool physical() const { return physical_; }

 private:
  FinRel composite_;
  int queries_ = 0;
  bool physical_ = true;
};

bool related(const FinRel& f, const StateVec& from, const StateVec& to) {
  for (Index a : from.members()) {
    for (const auto& p : f.row(a)) {
      if (to.contains(p.second)) return true;
    }
  }
  return false;
}

void require_classical_state(const std::vector<StateVec>& states,
                             const StateVec& s, const char* what) {
  if (std::find(states.begin(), states.end(), s) == states.end()) {
    throw InvalidInput(std::string(what) + " " + to_string(s) +
                       " is not a classical state of the X basis");
  }
}

FinRel oracle_for(const ComplementaryPair& pair_a, const ComplementaryPair& pair_b,
                  const StructuredRel& f, const RunOptions& options) {
  return build_oracle(
      OracleSpec(pair_a.z(), pair_b, f),
      options.unchecked ? OracleCheck::kUnchecked : OracleCheck::kChecked);
}

std::string outcome_decision(std::size_t possible, std::size_t total) {
  if (possible == 0) return "NONE";
  return possible == total ? "ALL" : "SOME";
}

}  // namespace

// ---------------------------------------------------------------------------
// Deutsch-Jozsa

DJInstance::DJInstance(ComplementaryPair pa, ComplementaryPair pb, FinRel rel)
    : pair_a(std::move(pa)),
      pair_b(std::move(pb)),
      f(std::move(rel), pair_a.z(), pair_b.z()) {
  if (pair_b.x().copies() < 2) {
    throw InvalidInput("the X basis of B needs at least two classical states");
  }
}

DJClass dj_classify(const DJInstance& inst) {
  const StateVec h0a = inst.pair_a.x_classical()[0];
  for (const StateVec& gk : inst.pair_b.z_classical()) {
    std::vector<IndexPair> block;
    for (Index a : h0a.members()) {
      for (Index b : gk.members()) block.emplace_back(a, b);
    }
    if (inst.f.rel() ==
        FinRel(inst.pair_a.size(), inst.pair_b.size(), std::move(block))) {
      return DJClass::kConstant;
    }
  }
  if (!related(inst.f.rel(), h0a, inst.pair_b.x_classical()[1])) {
    return DJClass::kBalanced;
  }
  return DJClass::kNeither;
}

RunReport dj_run(const DJInstance& inst, const RunOptions& options) {
  const ComplementaryPair& pa = inst.pair_a;
  const ComplementaryPair& pb = inst.pair_b;
  const std::size_t nb = pb.size();
  const StateVec h0a = pa.x_classical()[0];
  const StateVec h1b = pb.x_classical()[1];
  const FinRel oracle = oracle_for(pa, pb, inst.f, options);

  Pipeline absorbed(tensor(h0a.as_state(), h1b.as_state()));
  absorbed.add(StageKind::kOracle, oracle)
      .add(StageKind::kMeasure, tensor(h0a.as_effect(), identity(nb)));

  const StateVec output = StateVec::from_state(absorbed.composite());
  const Scalar decision = born_scalar(h1b, output);

  // {z in H_1^B | exists y in H_0^A: y f z}
  std::vector<Index> closed_form;
  for (Index z : h1b.members()) {
    for (Index y : h0a.members()) {
      if (inst.f.rel().contains(y, z)) {
        closed_form.push_back(z);
        break;
      }
    }
  }

  RunReport report;
  report.algorithm = Algorithm::kDeutschJozsa;
  report.instance = {pa.to_string(), pb.to_string(), inst.f.rel(),
                     std::nullopt};
  const DJClass cls = dj_classify(inst);
  if (cls == DJClass::kNeither) {
    report.decision = "UNDETERMINED";
  } else {
    report.decision = decision.possible ? "CONSTANT" : "BALANCED";
  }
  if (!output.empty()) report.possible_outcomes.push_back(output);
  report.scalars.emplace_back("decision", decision.possible);
  report.scalars.emplace_back("closed_form_possible", !closed_form.empty());
  report.scalars.emplace_back("closed_form_agrees",
                              closed_form.empty() == !decision.possible);
  report.scalars.emplace_back(
      "classifier_agrees",
      cls == DJClass::kNeither || to_string(cls) == report.decision);

  int queries = absorbed.queries();
  if (pa.g().order() == pa.h().order() && pb.g().order() == pb.h().order() &&
      pb.z().copies() >= 2) {
    // Prepare |G_0^A>, |G_1^B>, Fourier both, oracle, Fourier A, <G_0^A|.
    const FinRel fa = fourier_rel(pa);
    const FinRel fb = fourier_rel(pb);
    const StateVec g0a = pa.z_classical()[0];
    const StateVec g1b = pb.z_classical()[1];
    Pipeline full(tensor(g0a.as_state(), g1b.as_state()));
    full.add(StageKind::kEvolve, tensor(fa, fb))
        .add(StageKind::kOracle, oracle)
        .add(StageKind::kEvolve, tensor(fa, identity(nb)))
        .add(StageKind::kMeasure, tensor(g0a.as_effect(), identity(nb)));
    report.scalars.emplace_back("unabsorbed_matches",
                                full.composite() == absorbed.composite());
    queries = std::max(queries, full.queries());
  }

  report.diagnostics.oracle_unitary = is_unitary(oracle);
  report.diagnostics.queries = queries;
  report.diagnostics.physical = absorbed.physical();
  report.composites.push_back(absorbed.composite());
  return report;
}

// ---------------------------------------------------------------------------
// Grover

GroverInstance::GroverInstance(ComplementaryPair ps, ComplementaryPair pb,
                               FinRel rel, StateVec s)
    : pair_s(std::move(ps)),
      pair_b(std::move(pb)),
      f(std::move(rel), pair_s.z(), pair_b.z()),
      sigma(std::move(s)) {
  require_classical_state(pair_b.x_classical(), sigma, "sigma");
}

Diffusion grover_diffusion(const ComplementaryPair& pair_s) {
  const StateVec h0 = pair_s.x_classical()[0];
  const FinRel block = then(h0.as_effect(), h0.as_state());
  Diffusion d;
  d.rel = symmetric_difference(identity(pair_s.size()), block);
  d.unitary = is_unitary(d.rel);
  return d;
}

bool grover_zero_condition(const GroverInstance& inst, const StateVec& rho) {
  require_classical_state(inst.pair_s.x_classical(), rho, "rho");
  const FinRel& f = inst.f.rel();
  const FinRel sigma_effect = inst.sigma.as_effect();
  const StateVec g0 = inst.pair_s.z_classical()[0];
  const Scalar lhs = Scalar::from_rel(then(then(rho.as_state(), f), sigma_effect));
  const Scalar rhs = Scalar::from_rel(then(then(g0.as_state(), f), sigma_effect));
  return lhs == rhs;
}

bool grover_opposite_mapping(const GroverInstance& inst, const StateVec& rho) {
  const FinRel& f = inst.f.rel();
  const StateVec h0 = inst.pair_s.x_classical()[0];
  for (Index h : h0.members()) {
    for (Index s : rho.members()) {
      for (Index x : inst.sigma.members()) {
        if (f.contains(h, x) == f.contains(s, x)) return false;
      }
    }
  }
  return true;
}

RunReport grover_run(const GroverInstance& inst, const RunOptions& options) {
  const ComplementaryPair& ps = inst.pair_s;
  const std::size_t nb = inst.pair_b.size();
  const Diffusion diffusion = grover_diffusion(ps);
  const FinRel oracle = oracle_for(ps, inst.pair_b, inst.f, options);
  const StateVec h0 = ps.x_classical()[0];
  const FinRel prep = tensor(h0.as_state(), inst.sigma.as_state());

  RunReport report;
  report.algorithm = Algorithm::kGrover;
  report.instance = {ps.to_string(), inst.pair_b.to_string(), inst.f.rel(),
                     inst.sigma};
  bool physical = true;
  int queries = 0;
  const auto rhos = ps.x_classical();
  for (std::size_t k = 0; k < rhos.size(); ++k) {
    Pipeline run(prep);
    run.add(StageKind::kOracle, oracle)
        .add(StageKind::kEvolve, tensor(diffusion.rel, identity(nb)))
        .add(StageKind::kMeasure, tensor(rhos[k].as_effect(), identity(nb)));
    const bool possible = !run.composite().empty();
    const std::string key = "rho" + std::to_string(k);
    report.scalars.emplace_back(key + ".possible", possible);
    report.scalars.emplace_back(key + ".zero_condition",
                                grover_zero_condition(inst, rhos[k]));
    report.scalars.emplace_back(key + ".opposite_mapping",
                                grover_opposite_mapping(inst, rhos[k]));
    if (possible) report.possible_outcomes.push_back(rhos[k]);
    report.composites.push_back(run.composite());
    physical = physical && run.physical();
    queries = std::max(queries, run.queries());
  }
  report.decision =
      outcome_decision(report.possible_outcomes.size(), rhos.size());
  report.diagnostics.diffusion_unitary = diffusion.unitary;
  report.diagnostics.oracle_unitary = is_unitary(oracle);
  report.diagnostics.queries = queries;
  report.diagnostics.physical = physical;
  return report;
}

// ---------------------------------------------------------------------------
// GroupHomID

HomIDInstance::HomIDInstance(ComplementaryPair pg, ComplementaryPair pa,
                             FinRel rel, StateVec s)
    : pair_g(std::move(pg)),
      pair_a(std::move(pa)),
      f(std::move(rel), pair_g.z(), pair_a.z()),
      sigma(std::move(s)) {
  require_classical_state(pair_a.x_classical(), sigma, "sigma");
}

bool grouphomid_necessary(const HomIDInstance& inst, const StateVec& rho) {
  return related(inst.f.rel(), rho, inst.sigma);
}

bool grouphomid_verification(const HomIDInstance& inst, const StateVec& rho) {
  const FinRel scalar = then(then(inst.sigma.as_state(), converse(inst.f.rel())),
                             rho.as_effect());
  return Scalar::from_rel(scalar).possible;
}

RunReport grouphomid_run(const HomIDInstance& inst, const RunOptions& options) {
  const ComplementaryPair& pg = inst.pair_g;
  const std::size_t nb = inst.pair_a.size();
  const FinRel oracle = oracle_for(pg, inst.pair_a, inst.f, options);
  const FinRel prep =
      tensor(unit_rel(pg.z()).as_state(), inst.sigma.as_state());

  RunReport report;
  report.algorithm = Algorithm::kHomId;
  report.instance = {pg.to_string(), inst.pair_a.to_string(), inst.f.rel(),
                     inst.sigma};
  bool physical = true;
  int queries = 0;
  const auto rhos = pg.x_classical();
  for (std::size_t k = 0; k < rhos.size(); ++k) {
    Pipeline run(prep);
    run.add(StageKind::kOracle, oracle)
        .add(StageKind::kMeasure, tensor(rhos[k].as_effect(), identity(nb)));
    const bool possible = !run.composite().empty();
    const std::string key = "rho" + std::to_string(k);
    report.scalars.emplace_back(key + ".possible", possible);
    report.scalars.emplace_back(key + ".necessary",
                                grouphomid_necessary(inst, rhos[k]));
    report.scalars.emplace_back(key + ".verification",
                                grouphomid_verification(inst, rhos[k]));
    if (possible) report.possible_outcomes.push_back(rhos[k]);
    report.composites.push_back(run.composite());
    physical = physical && run.physical();
    queries = std::max(queries, run.queries());
  }
  report.decision =
      outcome_decision(report.possible_outcomes.size(), rhos.size());
  report.diagnostics.oracle_unitary = is_unitary(oracle);
  report.diagnostics.queries = queries;
  report.diagnostics.physical = physical;
  return report;
}

}  // namespace qcrel
