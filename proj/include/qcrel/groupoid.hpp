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

// Abelian groups, abelian groupoids (bases), and complementary pairs.
//
// Element coding:
//   * AbelianGroup Z_n1 x Z_n2 x ... : mixed radix, first factor most
//     significant. The identity is 0.
//   * Groupoid N copies of G : copy i, element g  |->  i*|G| + g.
//   * ComplementaryPair(G, H) on a set of size |G|*|H|: Z is |H| copies of G
//     in the groupoid coding above. The element with Z-label (i, g) carries
//     X-label (copy g, element i of H), i.e. X-flat index g*|H| + i. All
//     relations are expressed in the Z coding; X operations go through the
//     recode permutation.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcrel/relation.hpp"

namespace qcrel {

class AbelianGroup {
 public:
  /// Direct product of cyclic groups; throws InvalidInput on an empty list
  /// or a zero order.
  explicit AbelianGroup(std::vector<std::size_t> cyclic_orders);

  static AbelianGroup cyclic(std::size_t n) { return AbelianGroup({n}); }

  std::span<const std::size_t> cyclic_orders() const { return orders_; }
  std::size_t order() const { return order_; }

  Index add(Index a, Index b) const;
  Index negate(Index a) const;

  std::vector<std::size_t> coordinates(Index a) const;
  Index from_coordinates(std::span<const std::size_t> coords) const;

  /// "Z2", "Z2xZ3".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& l, const AbelianGroup& r) {
    return l.orders_ == r.orders_;
  }

 private:
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> strides_;
  std::size_t order_;
};

/// N disjoint copies of one abelian group with multiplication defined only
/// inside a copy.
class Groupoid {
 public:
  Groupoid(AbelianGroup base, std::size_t copies);

  const AbelianGroup& base() const { return base_; }
  std::size_t copies() const { return copies_; }
  std::size_t size() const { return copies_ * base_.order(); }

  std::size_t copy_of(Index e) const { return e / base_.order(); }
  Index group_element(Index e) const {
    return static_cast<Index>(e % base_.order());
  }
  Index element(std::size_t copy, Index g) const {
    return static_cast<Index>(copy * base_.order() + g);
  }

  /// a * b, or nullopt when a and b sit in different copies.
  std::optional<Index> multiply(Index a, Index b) const;
  Index inverse(Index e) const;
  Index identity_of(std::size_t copy) const { return element(copy, 0); }
  bool is_identity(Index e) const { return group_element(e) == 0; }
  std::vector<Index> identities() const;

  /// "Z2^2", "Z2xZ3^1".
  std::string to_string() const;

  friend bool operator==(const Groupoid&, const Groupoid&) = default;

 private:
  AbelianGroup base_;
  std::size_t copies_;
};

/// Multiplication A x A -> A as a relation (partial function graph).
FinRel mult_rel(const Groupoid& z);
/// Unit {*} -> A relating * to every identity.
StateVec unit_rel(const Groupoid& z);
/// Converses of the two above.
FinRel comult_rel(const Groupoid& z);
FinRel counit_rel(const Groupoid& z);

std::vector<StateVec> classical_states(const Groupoid& z);
std::vector<StateVec> unbiased_states(const Groupoid& z);

struct ClassicalLaws {
  bool frobenius = false;
  bool special = false;
  bool symmetric = false;
  bool coassoc = false;
  bool counital = false;

  bool all() const {
    return frobenius && special && symmetric && coassoc && counital;
  }
  friend bool operator==(const ClassicalLaws&, const ClassicalLaws&) = default;
};

/// Evaluates the comonoid, Frobenius, special and symmetric laws for an
/// arbitrary multiplication A x A -> A and unit {*} -> A, each as an exact
/// equality of two composite relations.
ClassicalLaws verify_frobenius_laws(const FinRel& mult, const FinRel& unit);

ClassicalLaws verify_classical_structure(const Groupoid& z);

/// Two groupoids on one underlying set of size |G|*|H|.
class ComplementaryPair {
 public:
  /// Canonical pair: Z = |H| copies of G, X = |G| copies of H.
  ComplementaryPair(AbelianGroup g, AbelianGroup h);

  /// Same groupoids with an explicit recode permutation (Z-flat -> X-flat).
  /// Complementarity is not assumed; check it with is_complementary.
  static ComplementaryPair with_recode(AbelianGroup g, AbelianGroup h,
                                       std::vector<Index> x_recode);

  const AbelianGroup& g() const { return g_; }
  const AbelianGroup& h() const { return h_; }
  const Groupoid& z() const { return z_; }
  const Groupoid& x() const { return x_; }
  std::size_t size() const { return z_.size(); }
  bool is_canonical() const { return canonical_; }

  std::span<const Index> x_recode() const { return to_x_; }
  Index to_x(Index e) const { return to_x_[e]; }
  Index from_x(Index xe) const { return from_x_[xe]; }

  /// X multiplication on Z-coded elements.
  std::optional<Index> x_multiply(Index a, Index b) const;

  /// Classical states of each basis, in the shared (Z) coding.
  std::vector<StateVec> z_classical() const { return classical_states(z_); }
  std::vector<StateVec> x_classical() const;
  std::vector<StateVec> x_unbiased() const;

  /// X multiplication and unit in the shared coding.
  FinRel x_mult_rel() const;
  StateVec x_unit() const;

  /// "pair(Z2,Z2)".
  std::string to_string() const;

  friend bool operator==(const ComplementaryPair& l,
                         const ComplementaryPair& r) {
    return l.g_ == r.g_ && l.h_ == r.h_ && l.to_x_ == r.to_x_;
  }

 private:
  ComplementaryPair(AbelianGroup g, AbelianGroup h,
                    std::vector<Index> x_recode, bool canonical);

  AbelianGroup g_;
  AbelianGroup h_;
  Groupoid z_;
  Groupoid x_;
  std::vector<Index> to_x_;
  std::vector<Index> from_x_;
  bool canonical_;
};

ComplementaryPair make_complementary_pair(const AbelianGroup& g,
                                          const AbelianGroup& h);

/// Abstract controlled-not on S x S for a Z structure, an X structure and
/// the recode Z-flat -> X-flat:
///   {((x, y), (a, b .X y)) | a .Z b = x}.
FinRel cnot_relation(const Groupoid& z, const Groupoid& x,
                     std::span<const Index> recode);

FinRel cnot(const ComplementaryPair& pair);

/// True iff the controlled-not built from (z, x, recode) is a bijection.
bool is_complementary(const Groupoid& z, const Groupoid& x,
                      std::span<const Index> recode);

/// Fourier relation for square pairs: i*n + g |-> g*n + i. Throws
/// UnsupportedPair when |G| != |H|; callers then prepare X-classical states
/// directly.
FinRel fourier_rel(const ComplementaryPair& pair);

}  // namespace qcrel
