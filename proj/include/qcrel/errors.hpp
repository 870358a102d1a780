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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcrel {

/// Malformed or inconsistent input: dimension mismatches, out-of-range
/// indices, unparsable specs. The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A relation handed to the oracle constructor is not a classical relation.
class NotClassical : public InvalidInput {
 public:
  NotClassical(const std::string& equation)
      : InvalidInput("relation is not classical: " + equation +
                     " equation fails"),
        equation_(equation) {}

  const std::string& equation() const { return equation_; }

 private:
  std::string equation_;
};

/// The explicit Fourier relation only exists for square pairs |G| == |H|.
class UnsupportedPair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t candidate_bits, std::uint64_t budget_bits)
      : std::runtime_error("candidate space 2^" +
                           std::to_string(candidate_bits) +
                           " exceeds budget 2^" + std::to_string(budget_bits)),
        candidate_bits_(candidate_bits) {}

  std::uint64_t candidate_bits() const { return candidate_bits_; }

 private:
  std::uint64_t candidate_bits_;
};

}  // namespace qcrel
