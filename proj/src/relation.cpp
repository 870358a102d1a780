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

#include "qcrel/relation.hpp"

#include <algorithm>
#include <sstream>

#include "qcrel/errors.hpp"

namespace qcrel {

namespace {

void check_size(std::size_t n, const char* what) {
  if (n == 0) {
    throw InvalidInput(std::string(what) + " size must be positive");
  }
  if (n > kMaxSetSize) {
    throw InvalidInput(std::string(what) + " size " + std::to_string(n) +
                       " exceeds limit");
  }
}

std::size_t checked_product(std::size_t a, std::size_t b) {
  if (b != 0 && a > kMaxSetSize / b) {
    throw InvalidInput("product set size " + std::to_string(a) + "*" +
                       std::to_string(b) + " overflows");
  }
  return a * b;
}

}  // namespace

FinRel::FinRel(std::size_t dom, std::size_t cod, std::vector<IndexPair> pairs)
    : dom_(dom), cod_(cod), pairs_(std::move(pairs)) {
  check_size(dom_, "domain");
  check_size(cod_, "codomain");
  for (const auto& [a, b] : pairs_) {
    if (a >= dom_ || b >= cod_) {
      throw InvalidInput("pair (" + std::to_string(a) + "," +
                         std::to_string(b) + ") out of range for " +
                         std::to_string(dom_) + "->" + std::to_string(cod_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());

  row_start_.assign(dom_ + 1, 0);
  for (const auto& p : pairs_) ++row_start_[p.first + 1];
  for (std::size_t i = 0; i < dom_; ++i) row_start_[i + 1] += row_start_[i];
}

bool FinRel::contains(Index a, Index b) const {
  if (a >= dom_) return false;
  auto r = row(a);
  return std::binary_search(r.begin(), r.end(), IndexPair{a, b});
}

std::span<const IndexPair> FinRel::row(Index a) const {
  if (a >= dom_) return {};
  return std::span<const IndexPair>(pairs_).subspan(
      row_start_[a], row_start_[a + 1] - row_start_[a]);
}

std::vector<Index> FinRel::image(std::span<const Index> sources) const {
  std::vector<char> hit(cod_, 0);
  for (Index a : sources) {
    for (const auto& p : row(a)) hit[p.second] = 1;
  }
  std::vector<Index> out;
  for (std::size_t b = 0; b < cod_; ++b) {
    if (hit[b]) out.push_back(static_cast<Index>(b));
  }
  return out;
}

std::vector<Index> FinRel::image_of(Index a) const {
  std::vector<Index> out;
  for (const auto& p : row(a)) out.push_back(p.second);
  return out;
}

std::strong_ordering operator<=>(const FinRel& l, const FinRel& r) {
  if (auto c = l.dom_ <=> r.dom_; c != 0) return c;
  if (auto c = l.cod_ <=> r.cod_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      l.pairs_.begin(), l.pairs_.end(), r.pairs_.begin(), r.pairs_.end());
}

StateVec::StateVec(std::size_t space_size, std::vector<Index> members)
    : space_size_(space_size), members_(std::move(members)) {
  check_size(space_size_, "state space");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= space_size_) {
    throw InvalidInput("state member " + std::to_string(members_.back()) +
                       " out of range for space of size " +
                       std::to_string(space_size_));
  }
}

bool StateVec::contains(Index i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

FinRel StateVec::as_state() const {
  std::vector<IndexPair> pairs;
  pairs.reserve(members_.size());
  for (Index m : members_) pairs.emplace_back(0, m);
  return FinRel(1, space_size_, std::move(pairs));
}

FinRel StateVec::as_effect() const { return converse(as_state()); }

StateVec StateVec::from_state(const FinRel& r) {
  if (r.dom() != 1) {
    throw InvalidInput("a state is a relation out of the one-element set");
  }
  return StateVec(r.cod(), r.image_of(0));
}

FinRel Scalar::as_rel() const {
  return possible ? identity(1) : empty_rel(1, 1);
}

Scalar Scalar::from_rel(const FinRel& r) {
  if (r.dom() != 1 || r.cod() != 1) {
    throw InvalidInput("a scalar is a relation {*} -> {*}");
  }
  return Scalar{!r.empty()};
}

FinRel then(const FinRel& first, const FinRel& second) {
  if (first.cod() != second.dom()) {
    throw InvalidInput("cannot compose " + std::to_string(first.dom()) +
                       "->" + std::to_string(first.cod()) + " with " +
                       std::to_string(second.dom()) + "->" +
                       std::to_string(second.cod()));
  }
  std::vector<IndexPair> out;
  std::vector<char> hit(second.cod(), 0);
  std::vector<Index> touched;
  for (std::size_t a = 0; a < first.dom(); ++a) {
    for (const auto& p : first.row(static_cast<Index>(a))) {
      for (const auto& q : second.row(p.second)) {
        if (!hit[q.second]) {
          hit[q.second] = 1;
          touched.push_back(q.second);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Index c : touched) {
      out.emplace_back(static_cast<Index>(a), c);
      hit[c] = 0;
    }
    touched.clear();
  }
  return FinRel(first.dom(), second.cod(), std::move(out));
}

FinRel after(const FinRel& second, const FinRel& first) {
  return then(first, second);
}

FinRel converse(const FinRel& r) {
  std::vector<IndexPair> out;
  out.reserve(r.size());
  for (const auto& [a, b] : r.pairs()) out.emplace_back(b, a);
  return FinRel(r.cod(), r.dom(), std::move(out));
}

FinRel tensor(const FinRel& r, const FinRel& s) {
  const std::size_t dom = checked_product(r.dom(), s.dom());
  const std::size_t cod = checked_product(r.cod(), s.cod());
  std::vector<IndexPair> out;
  out.reserve(r.size() * s.size());
  for (const auto& [a, b] : r.pairs()) {
    for (const auto& [c, d] : s.pairs()) {
      out.emplace_back(flat_pair(a, c, s.dom()), flat_pair(b, d, s.cod()));
    }
  }
  return FinRel(dom, cod, std::move(out));
}

namespace {

void require_same_shape(const FinRel& r, const FinRel& s, const char* op) {
  if (r.dom() != s.dom() || r.cod() != s.cod()) {
    throw InvalidInput(std::string(op) + " needs relations of equal shape");
  }
}

}  // namespace

FinRel symmetric_difference(const FinRel& r, const FinRel& s) {
  require_same_shape(r, s, "symmetric difference");
  std::vector<IndexPair> out;
  std::set_symmetric_difference(r.pairs().begin(), r.pairs().end(),
                                s.pairs().begin(), s.pairs().end(),
                                std::back_inserter(out));
  return FinRel(r.dom(), r.cod(), std::move(out));
}

FinRel rel_union(const FinRel& r, const FinRel& s) {
  require_same_shape(r, s, "union");
  std::vector<IndexPair> out;
  std::set_union(r.pairs().begin(), r.pairs().end(), s.pairs().begin(),
                 s.pairs().end(), std::back_inserter(out));
  return FinRel(r.dom(), r.cod(), std::move(out));
}

StateVec apply(const FinRel& r, const StateVec& state) {
  return StateVec::from_state(then(state.as_state(), r));
}

bool is_unitary(const FinRel& r) {
  if (r.dom() != r.cod() || r.size() != r.dom()) return false;
  std::vector<char> src(r.dom(), 0), dst(r.cod(), 0);
  for (const auto& [a, b] : r.pairs()) {
    if (src[a] || dst[b]) return false;
    src[a] = dst[b] = 1;
  }
  return true;
}

bool is_unitary_by_composition(const FinRel& r) {
  const FinRel rc = converse(r);
  return then(r, rc) == identity(r.dom()) && then(rc, r) == identity(r.cod());
}

Scalar born_scalar(const StateVec& effect, const StateVec& state) {
  if (effect.space_size() != state.space_size()) {
    throw InvalidInput("effect and state live on different spaces");
  }
  auto e = effect.members();
  auto s = state.members();
  auto ei = e.begin();
  auto si = s.begin();
  while (ei != e.end() && si != s.end()) {
    if (*ei == *si) return Scalar{true};
    if (*ei < *si) {
      ++ei;
    } else {
      ++si;
    }
  }
  return Scalar{false};
}

FinRel identity(std::size_t n) {
  std::vector<IndexPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(static_cast<Index>(i), static_cast<Index>(i));
  }
  return FinRel(n, n, std::move(pairs));
}

FinRel empty_rel(std::size_t dom, std::size_t cod) {
  return FinRel(dom, cod, {});
}

FinRel full_rel(std::size_t dom, std::size_t cod) {
  check_size(dom, "domain");
  check_size(cod, "codomain");
  std::vector<IndexPair> pairs;
  pairs.reserve(checked_product(dom, cod));
  for (std::size_t a = 0; a < dom; ++a) {
    for (std::size_t b = 0; b < cod; ++b) {
      pairs.emplace_back(static_cast<Index>(a), static_cast<Index>(b));
    }
  }
  return FinRel(dom, cod, std::move(pairs));
}

FinRel swap_rel(std::size_t n, std::size_t m) {
  const std::size_t size = checked_product(n, m);
  std::vector<IndexPair> pairs;
  pairs.reserve(size);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      pairs.emplace_back(flat_pair(a, b, m), flat_pair(b, a, n));
    }
  }
  return FinRel(size, size, std::move(pairs));
}

FinRel primitive_relation(std::string_view kind, std::size_t n,
                          std::size_t m) {
  if (kind == "identity") return identity(n);
  if (kind == "empty") return empty_rel(n, m);
  if (kind == "full") return full_rel(n, m);
  if (kind == "swap") return swap_rel(n, m);
  throw InvalidInput("unknown primitive relation kind '" + std::string(kind) +
                     "'");
}

std::string to_string(const FinRel& r) {
  std::ostringstream os;
  os << r.dom() << "->" << r.cod() << " {";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    os << (first ? "" : ",") << "(" << a << "," << b << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

std::string to_string(const StateVec& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Index m : s.members()) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace qcrel
