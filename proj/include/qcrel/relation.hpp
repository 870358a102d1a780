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

// Exact algebra of relations between finite index sets.
//
// A FinRel is a subset of [0, dom) x [0, cod). States are relations out of
// the one-element set {*}, effects are relations into it, and scalars are the
// two relations {*} -> {*}.
//
// COMPOSITION ORDER. `then(first, second)` is diagrammatic: apply `first`,
// then `second`. `after(second, first)` is the mathematical "second after
// first" and is defined as `then(first, second)`. Every composite in this
// library is written with `then` unless it transcribes a formula that is
// stated with `after`.
//
// PRODUCT CODING. The product of index sets A x C is flattened row-major:
// (a, c) |-> a * |C| + c. Every module uses this single coding.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcrel {

using Index = std::uint32_t;
using IndexPair = std::pair<Index, Index>;

/// Flat index of (a, c) in A x C where |C| == inner_size.
constexpr Index flat_pair(Index a, Index c, std::size_t inner_size) {
  return static_cast<Index>(a * inner_size + c);
}

/// Largest index set a product may produce.
inline constexpr std::size_t kMaxSetSize = std::size_t{1} << 26;

/// Relation between two finite index sets. Immutable; pairs are kept sorted
/// lexicographically and duplicate-free, with a row index built on
/// construction.
class FinRel {
 public:
  /// Empty relation {*} -> {*}.
  FinRel() : FinRel(1, 1, {}) {}

  /// Builds the relation; duplicate pairs collapse. Throws InvalidInput on
  /// zero sizes or out-of-range pairs.
  FinRel(std::size_t dom, std::size_t cod, std::vector<IndexPair> pairs);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  std::span<const IndexPair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  bool contains(Index a, Index b) const;

  /// Pairs whose source is `a`, sorted by target.
  std::span<const IndexPair> row(Index a) const;

  /// Image of a set of source indices, sorted.
  std::vector<Index> image(std::span<const Index> sources) const;
  std::vector<Index> image_of(Index a) const;

  friend bool operator==(const FinRel& l, const FinRel& r) {
    return l.dom_ == r.dom_ && l.cod_ == r.cod_ && l.pairs_ == r.pairs_;
  }
  /// Canonical order: dimensions, then pair sets lexicographically.
  friend std::strong_ordering operator<=>(const FinRel& l, const FinRel& r);

 private:
  std::size_t dom_;
  std::size_t cod_;
  std::vector<IndexPair> pairs_;
  std::vector<std::uint32_t> row_start_;  // dom_ + 1 offsets into pairs_
};

/// Subset of a finite set; losslessly a relation {*} -> set.
class StateVec {
 public:
  StateVec(std::size_t space_size, std::vector<Index> members);

  std::size_t space_size() const { return space_size_; }
  std::span<const Index> members() const { return members_; }
  bool contains(Index i) const;
  bool empty() const { return members_.empty(); }

  /// The state as a relation {*} -> space.
  FinRel as_state() const;
  /// The converse: the effect space -> {*}.
  FinRel as_effect() const;
  /// Inverse of as_state; throws InvalidInput unless dom == 1.
  static StateVec from_state(const FinRel& r);

  friend bool operator==(const StateVec&, const StateVec&) = default;
  friend auto operator<=>(const StateVec&, const StateVec&) = default;

 private:
  std::size_t space_size_;
  std::vector<Index> members_;
};

/// One of the two relations {*} -> {*}.
struct Scalar {
  bool possible = false;

  FinRel as_rel() const;
  /// Throws InvalidInput unless r is 1 -> 1.
  static Scalar from_rel(const FinRel& r);

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// Apply `first`, then `second`. Requires first.cod() == second.dom().
FinRel then(const FinRel& first, const FinRel& second);

/// `second` after `first`, i.e. then(first, second).
FinRel after(const FinRel& second, const FinRel& first);

/// Alias of `then`: compose(first, second) applies `first` then `second`.
inline FinRel compose(const FinRel& first, const FinRel& second) {
  return then(first, second);
}

FinRel converse(const FinRel& r);

/// Parallel composition on product sets, row-major flat coding.
FinRel tensor(const FinRel& r, const FinRel& s);

/// Pairs in exactly one of r, s. Requires equal dimensions.
FinRel symmetric_difference(const FinRel& r, const FinRel& s);

FinRel rel_union(const FinRel& r, const FinRel& s);

/// Image of a state under a relation.
StateVec apply(const FinRel& r, const StateVec& state);

/// Bijection test by counting: every source and every target index appears
/// in exactly one pair.
bool is_unitary(const FinRel& r);

/// Bijection test by the defining equations r;r^-1 == id and r^-1;r == id.
bool is_unitary_by_composition(const FinRel& r);

/// Possibilistic Born rule: is <effect|state> the identity on {*}?
Scalar born_scalar(const StateVec& effect, const StateVec& state);

FinRel identity(std::size_t n);
FinRel empty_rel(std::size_t dom, std::size_t cod);
FinRel full_rel(std::size_t dom, std::size_t cod);
/// Swap on n x m: (a, b) |-> (b, a), from n*m to m*n.
FinRel swap_rel(std::size_t n, std::size_t m);

/// Named primitive: "identity" (n), "empty" (n, m), "full" (n, m),
/// "swap" (n, m). Throws InvalidInput for unknown kinds.
FinRel primitive_relation(std::string_view kind, std::size_t n,
                          std::size_t m);

std::string to_string(const FinRel& r);
std::string to_string(const StateVec& s);

}  // namespace qcrel
