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

#pragma once

#include "qcrel/groupoid.hpp"
#include "qcrel/relation.hpp"
#include "qcrel/structmaps.hpp"

namespace qcrel {

struct RunReport;

/// Inputs of an oracle on A x B: the black structure on A, the gray/white
/// complementary pair on B, and the blackbox relation f: Z^A -> Z^B.
class OracleSpec {
 public:
  /// Throws InvalidInput unless f runs from za to pair_b.z().
  OracleSpec(Groupoid za, ComplementaryPair pair_b, StructuredRel f);

  const Groupoid& za() const { return za_; }
  const ComplementaryPair& pair_b() const { return pair_b_; }
  const StructuredRel& f() const { return f_; }

 private:
  Groupoid za_;
  ComplementaryPair pair_b_;
  StructuredRel f_;
};

enum class OracleCheck {
  kChecked,    // reject non-classical f with NotClassical
  kUnchecked,  // build the comprehension for any f
};

/// Endo-relation on A x B:
///   {((x, y), (a, c .X y)) | exists b: a .ZA b == x and b f c}.
FinRel build_oracle(const OracleSpec& spec,
                    OracleCheck check = OracleCheck::kChecked);

/// Number of oracle applications inside the composites of a run.
int oracle_query_count(const RunReport& report);

}  // namespace qcrel
