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

// Blackbox algorithm pipelines as relational composites.
//
// Every runner builds its composite stage by stage with `then`, starting
// from a state on {*} x {*} and ending in {*} x B. A measurement outcome is
// possible exactly when the composite is nonempty.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcrel/groupoid.hpp"
#include "qcrel/oracle.hpp"
#include "qcrel/relation.hpp"
#include "qcrel/structmaps.hpp"

namespace qcrel {

enum class Algorithm { kDeutschJozsa, kGrover, kHomId };

std::string to_string(Algorithm a);
/// Inverse of to_string ("dj", "grover", "homid").
Algorithm algorithm_from_string(const std::string& name);

/// Inputs echoed into a report.
struct InstanceSummary {
  std::string first_pair;   // pair on A (DJ) or S (Grover, GroupHomID)
  std::string second_pair;  // pair on B
  FinRel oracle;            // the blackbox relation f
  std::optional<StateVec> sigma;

  friend bool operator==(const InstanceSummary&,
                         const InstanceSummary&) = default;
};

struct RunDiagnostics {
  std::optional<bool> diffusion_unitary;  // Grover only
  bool oracle_unitary = false;
  int queries = 0;
  /// False when an evolution stage fails is_unitary.
  bool physical = false;

  friend bool operator==(const RunDiagnostics&,
                         const RunDiagnostics&) = default;
};

struct RunReport {
  Algorithm algorithm = Algorithm::kDeutschJozsa;
  InstanceSummary instance;
  /// DJ: CONSTANT, BALANCED or UNDETERMINED. Others: ALL, SOME or NONE
  /// according to how many candidate outcomes are possible.
  std::string decision;
  std::vector<StateVec> possible_outcomes;
  /// Named Born scalars and predicate values, in insertion order.
  std::vector<std::pair<std::string, bool>> scalars;
  RunDiagnostics diagnostics;
  /// DJ: one composite {*} -> B. Others: one per candidate outcome, in
  /// classical-state order.
  std::vector<FinRel> composites;

  std::optional<bool> scalar(const std::string& name) const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
  /// Build oracles even for non-classical f.
  bool unchecked = false;
};

// ---------------------------------------------------------------------------
// Deutsch-Jozsa

struct DJInstance {
  /// Throws InvalidInput on size mismatch or when X^B has fewer than two
  /// classical states.
  DJInstance(ComplementaryPair pair_a, ComplementaryPair pair_b, FinRel f);

  ComplementaryPair pair_a;
  ComplementaryPair pair_b;
  StructuredRel f;
};

enum class DJClass { kConstant, kBalanced, kNeither };
std::string to_string(DJClass c);

/// Constant: f == H_0^A x G_k^B for some k. Balanced: f(H_0^A) misses the
/// second classical state of X^B.
DJClass dj_classify(const DJInstance& inst);

/// (<H_0^A| x id_B) . Oracle(f) . (|H_0^A> x |H_1^B>), decided by the Born
/// scalar of the B output against the second classical state of X^B.
RunReport dj_run(const DJInstance& inst, const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Single-shot Grover

struct GroverInstance {
  /// sigma must be a classical state of pair_b's X basis.
  GroverInstance(ComplementaryPair pair_s, ComplementaryPair pair_b, FinRel f,
                 StateVec sigma);

  ComplementaryPair pair_s;
  ComplementaryPair pair_b;
  StructuredRel f;
  StateVec sigma;
};

struct Diffusion {
  FinRel rel;
  bool unitary = false;
};

/// id_S symmetric-difference (H_0 x H_0), H_0 the first classical state of
/// X^S.
Diffusion grover_diffusion(const ComplementaryPair& pair_s);

/// For each classical state rho of X^S, the possibility of
/// (<rho| x id) . (D x id) . Oracle(f) . (|H_0^S> x |sigma>).
RunReport grover_run(const GroverInstance& inst,
                     const RunOptions& options = {});

/// sigma . f . rho == sigma . f . |G_0>, as scalars. Throws InvalidInput
/// unless rho is a classical state of X^S.
bool grover_zero_condition(const GroverInstance& inst, const StateVec& rho);

/// For all h in H_0^S, s in rho, x in sigma: (h f x) == !(s f x).
bool grover_opposite_mapping(const GroverInstance& inst, const StateVec& rho);

// ---------------------------------------------------------------------------
// Groupoid homomorphism identification

struct HomIDInstance {
  /// f runs from pair_g.z() to pair_a.z(); sigma is a classical state of
  /// pair_a's X basis.
  HomIDInstance(ComplementaryPair pair_g, ComplementaryPair pair_a, FinRel f,
                StateVec sigma);

  ComplementaryPair pair_g;
  ComplementaryPair pair_a;
  StructuredRel f;
  StateVec sigma;
};

/// For each classical state rho of X^S, the possibility of
/// (<rho| x id) . Oracle(f) . (|H_0> x |sigma>).
RunReport grouphomid_run(const HomIDInstance& inst,
                         const RunOptions& options = {});

/// Witness predicate: some s in rho and b in sigma with (s, b) in f.
bool grouphomid_necessary(const HomIDInstance& inst, const StateVec& rho);

/// The same condition as the scalar <rho| . f^-1 . |sigma>.
bool grouphomid_verification(const HomIDInstance& inst, const StateVec& rho);

}  // namespace qcrel
