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

// Structure-preserving relations between groupoids.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcrel/groupoid.hpp"
#include "qcrel/relation.hpp"

namespace qcrel {

/// A relation together with the groupoids on its two ends.
class StructuredRel {
 public:
  /// Throws InvalidInput unless rel is source.size() -> target.size().
  StructuredRel(FinRel rel, Groupoid source, Groupoid target);

  const FinRel& rel() const { return rel_; }
  const Groupoid& source() const { return source_; }
  const Groupoid& target() const { return target_; }

  /// Same relation read backwards, target -> source.
  StructuredRel converse() const;

  friend bool operator==(const StructuredRel&, const StructuredRel&) = default;

 private:
  FinRel rel_;
  Groupoid source_;
  Groupoid target_;
};

/// R(x . y) == R(x) . R(y) for all x, y, with set multiplication
/// A . B = {a . b | defined} and R(undefined) = {}.
bool is_groupoid_hom_relation(const StructuredRel& s);

/// Every copy (object) of the target contains the image of some element.
bool is_surjective_on_objects(const StructuredRel& s);

/// mult ; r == (r x r) ; mult and unit ; r == unit, as relation equalities.
bool is_monoid_hom_relation(const StructuredRel& s);

/// delta ; (r x r) == r ; delta and r ; eps == eps, as relation equalities.
bool is_classical_relation(const StructuredRel& s);

/// Names the first failing comonoid equation ("comultiplication" or
/// "counit"), or nullopt when s is classical.
std::optional<std::string> classical_failure(const StructuredRel& s);

/// For every target element t: inverses of f^-1(t^-1) == f^-1(t).
bool is_self_conjugate(const StructuredRel& s);

struct RelationVerdicts {
  bool groupoid_hom = false;
  bool surjective_on_objects = false;
  bool monoid_hom = false;
  bool classical = false;
  bool self_conjugate = false;
};

RelationVerdicts check_all(const StructuredRel& s);

struct EnumerateOptions {
  /// Maximum log2 of the candidate space |source| * |target|.
  std::uint64_t budget_bits = 24;
  /// 0 reads QCREL_THREADS, falling back to hardware concurrency.
  unsigned threads = 0;
  /// Restrict rows by the counit equation before testing candidates.
  bool prune = true;
};

/// All classical relations source -> target, sorted canonically. Throws
/// BudgetExceeded when |source| * |target| > budget_bits.
std::vector<FinRel> enumerate_classical_relations(
    const Groupoid& source, const Groupoid& target,
    const EnumerateOptions& options = {});

/// Thread count after applying QCREL_THREADS.
unsigned resolve_threads(unsigned requested);

}  // namespace qcrel
