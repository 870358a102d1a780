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

#include "qcrel/oracle.hpp"

#include "qcrel/algorithms.hpp"
#include "qcrel/errors.hpp"

namespace qcrel {

OracleSpec::OracleSpec(Groupoid za, ComplementaryPair pair_b, StructuredRel f)
    : za_(std::move(za)), pair_b_(std::move(pair_b)), f_(std::move(f)) {
  if (!(f_.source() == za_) || !(f_.target() == pair_b_.z())) {
    throw InvalidInput("oracle relation must run from " + za_.to_string() +
                       " to " + pair_b_.z().to_string());
  }
}

FinRel build_oracle(const OracleSpec& spec, OracleCheck check) {
  if (check == OracleCheck::kChecked) {
    if (auto failing = classical_failure(spec.f())) throw NotClassical(*failing);
  }
  const Groupoid& za = spec.za();
  const ComplementaryPair& pb = spec.pair_b();
  const std::size_t na = za.size();
  const std::size_t nb = pb.size();
  const FinRel& f = spec.f().rel();

  std::vector<IndexPair> pairs;
  for (Index a = 0; a < na; ++a) {
    for (Index b = 0; b < na; ++b) {
      const auto x = za.multiply(a, b);
      if (!x) continue;
      for (const auto& [src, c] : f.row(b)) {
        for (Index y = 0; y < nb; ++y) {
          if (auto cy = pb.x_multiply(c, y)) {
            pairs.emplace_back(flat_pair(*x, y, nb), flat_pair(a, *cy, nb));
          }
        }
      }
    }
  }
  return FinRel(na * nb, na * nb, std::move(pairs));
}

int oracle_query_count(const RunReport& report) {
  return report.diagnostics.queries;
}

}  // namespace qcrel
