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

#include "qcrel/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "qcrel/errors.hpp"

namespace qcrel {

AbelianGroup::AbelianGroup(std::vector<std::size_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)), order_(1) {
  if (orders_.empty()) {
    throw InvalidInput("abelian group needs at least one cyclic factor");
  }
  for (std::size_t n : orders_) {
    if (n == 0) throw InvalidInput("cyclic group order must be >= 1");
    if (order_ > kMaxSetSize / n) throw InvalidInput("group order overflows");
    order_ *= n;
  }
  strides_.resize(orders_.size());
  std::size_t stride = 1;
  for (std::size_t k = orders_.size(); k-- > 0;) {
    strides_[k] = stride;
    stride *= orders_[k];
  }
}

std::vector<std::size_t> AbelianGroup::coordinates(Index a) const {
  std::vector<std::size_t> c(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    c[k] = (a / strides_[k]) % orders_[k];
  }
  return c;
}

Index AbelianGroup::from_coordinates(std::span<const std::size_t> c) const {
  if (c.size() != orders_.size()) {
    throw InvalidInput("coordinate count does not match factor count");
  }
  std::size_t flat = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    flat += (c[k] % orders_[k]) * strides_[k];
  }
  return static_cast<Index>(flat);
}

Index AbelianGroup::add(Index a, Index b) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t ca = (a / strides_[k]) % orders_[k];
    const std::size_t cb = (b / strides_[k]) % orders_[k];
    flat += ((ca + cb) % orders_[k]) * strides_[k];
  }
  return static_cast<Index>(flat);
}

Index AbelianGroup::negate(Index a) const {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const std::size_t ca = (a / strides_[k]) % orders_[k];
    flat += ((orders_[k] - ca) % orders_[k]) * strides_[k];
  }
  return static_cast<Index>(flat);
}

std::string AbelianGroup::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    if (k) out += "x";
    out += "Z" + std::to_string(orders_[k]);
  }
  return out;
}

Groupoid::Groupoid(AbelianGroup base, std::size_t copies)
    : base_(std::move(base)), copies_(copies) {
  if (copies_ == 0) throw InvalidInput("groupoid needs at least one copy");
  if (base_.order() > kMaxSetSize / copies_) {
    throw InvalidInput("groupoid size overflows");
  }
}

std::optional<Index> Groupoid::multiply(Index a, Index b) const {
  if (copy_of(a) != copy_of(b)) return std::nullopt;
  return element(copy_of(a), base_.add(group_element(a), group_element(b)));
}

Index Groupoid::inverse(Index e) const {
  return element(copy_of(e), base_.negate(group_element(e)));
}

std::vector<Index> Groupoid::identities() const {
  std::vector<Index> ids;
  for (std::size_t i = 0; i < copies_; ++i) ids.push_back(identity_of(i));
  return ids;
}

std::string Groupoid::to_string() const {
  return base_.to_string() + "^" + std::to_string(copies_);
}

FinRel mult_rel(const Groupoid& z) {
  const std::size_t n = z.size();
  std::vector<IndexPair> pairs;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (auto c = z.multiply(a, b)) pairs.emplace_back(flat_pair(a, b, n), *c);
    }
  }
  return FinRel(n * n, n, std::move(pairs));
}

StateVec unit_rel(const Groupoid& z) {
  return StateVec(z.size(), z.identities());
}

FinRel comult_rel(const Groupoid& z) { return converse(mult_rel(z)); }

FinRel counit_rel(const Groupoid& z) { return unit_rel(z).as_effect(); }

std::vector<StateVec> classical_states(const Groupoid& z) {
  std::vector<StateVec> out;
  const std::size_t k = z.base().order();
  for (std::size_t i = 0; i < z.copies(); ++i) {
    std::vector<Index> block(k);
    std::iota(block.begin(), block.end(), static_cast<Index>(i * k));
    out.emplace_back(z.size(), std::move(block));
  }
  return out;
}

std::vector<StateVec> unbiased_states(const Groupoid& z) {
  std::vector<StateVec> out;
  for (Index g = 0; g < z.base().order(); ++g) {
    std::vector<Index> members;
    for (std::size_t i = 0; i < z.copies(); ++i) {
      members.push_back(z.element(i, g));
    }
    out.emplace_back(z.size(), std::move(members));
  }
  return out;
}

ClassicalLaws verify_frobenius_laws(const FinRel& mult, const FinRel& unit) {
  const std::size_t n = mult.cod();
  if (mult.dom() != n * n || unit.dom() != 1 || unit.cod() != n) {
    throw InvalidInput("multiplication must be A x A -> A and unit {*} -> A");
  }
  const FinRel id = identity(n);
  const FinRel delta = converse(mult);
  const FinRel eps = converse(unit);

  ClassicalLaws laws;
  // (delta x id) . delta == (id x delta) . delta
  laws.coassoc =
      then(delta, tensor(delta, id)) == then(delta, tensor(id, delta));
  // (id x eps) . delta == id == (eps x id) . delta
  laws.counital = then(delta, tensor(id, eps)) == id &&
                  then(delta, tensor(eps, id)) == id;
  // (delta^-1 x id) . (id x delta) == (id x delta^-1) . (delta x id)
  laws.frobenius = then(tensor(id, delta), tensor(mult, id)) ==
                   then(tensor(delta, id), tensor(id, mult));
  // delta^-1 . delta == id
  laws.special = then(delta, mult) == id;
  // nu . delta . eps^-1 == delta . eps^-1
  const FinRel cup = then(unit, delta);
  laws.symmetric = then(cup, swap_rel(n, n)) == cup;
  return laws;
}

ClassicalLaws verify_classical_structure(const Groupoid& z) {
  return verify_frobenius_laws(mult_rel(z), unit_rel(z).as_state());
}

namespace {

std::vector<Index> canonical_recode(const AbelianGroup& g,
                                    const AbelianGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng > kMaxSetSize / nh) {
    throw InvalidInput("complementary pair size |G|*|H| overflows");
  }
  std::vector<Index> recode(ng * nh);
  for (std::size_t i = 0; i < nh; ++i) {
    for (std::size_t e = 0; e < ng; ++e) {
      recode[i * ng + e] = static_cast<Index>(e * nh + i);
    }
  }
  return recode;
}

std::vector<Index> invert_permutation(std::span<const Index> perm) {
  std::vector<Index> inv(perm.size(), 0);
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) {
      throw InvalidInput("recode is not a permutation of the underlying set");
    }
    seen[perm[i]] = 1;
    inv[perm[i]] = static_cast<Index>(i);
  }
  return inv;
}

}  // namespace

ComplementaryPair::ComplementaryPair(AbelianGroup g, AbelianGroup h)
    : ComplementaryPair(g, h, canonical_recode(g, h), true) {
  // Classical states of Z are the unbiased states of X and vice versa.
  const auto zc = z_classical();
  const auto xu = x_unbiased();
  const auto xc = x_classical();
  const auto zu = unbiased_states(z_);
  if (zc != xu || xc != zu) {
    throw std::logic_error("canonical pair coding is not mutually unbiased");
  }
}

ComplementaryPair::ComplementaryPair(AbelianGroup g, AbelianGroup h,
                                     std::vector<Index> x_recode,
                                     bool canonical)
    : g_(std::move(g)),
      h_(std::move(h)),
      z_(g_, h_.order()),
      x_(h_, g_.order()),
      to_x_(std::move(x_recode)),
      canonical_(canonical) {
  if (to_x_.size() != z_.size()) {
    throw InvalidInput("recode size does not match the underlying set");
  }
  from_x_ = invert_permutation(to_x_);
}

ComplementaryPair ComplementaryPair::with_recode(AbelianGroup g,
                                                 AbelianGroup h,
                                                 std::vector<Index> x_recode) {
  const bool canonical = x_recode == canonical_recode(g, h);
  return ComplementaryPair(std::move(g), std::move(h), std::move(x_recode),
                           canonical);
}

std::optional<Index> ComplementaryPair::x_multiply(Index a, Index b) const {
  if (auto c = x_.multiply(to_x_[a], to_x_[b])) return from_x_[*c];
  return std::nullopt;
}

namespace {

std::vector<StateVec> recode_states(const std::vector<StateVec>& states,
                                    std::span<const Index> from_x) {
  std::vector<StateVec> out;
  for (const auto& s : states) {
    std::vector<Index> members;
    for (Index m : s.members()) members.push_back(from_x[m]);
    out.emplace_back(s.space_size(), std::move(members));
  }
  return out;
}

}  // namespace

std::vector<StateVec> ComplementaryPair::x_classical() const {
  return recode_states(classical_states(x_), from_x_);
}

std::vector<StateVec> ComplementaryPair::x_unbiased() const {
  return recode_states(unbiased_states(x_), from_x_);
}

FinRel ComplementaryPair::x_mult_rel() const {
  const std::size_t n = size();
  std::vector<IndexPair> pairs;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (auto c = x_multiply(a, b)) pairs.emplace_back(flat_pair(a, b, n), *c);
    }
  }
  return FinRel(n * n, n, std::move(pairs));
}

StateVec ComplementaryPair::x_unit() const {
  std::vector<Index> ids;
  for (Index xe : x_.identities()) ids.push_back(from_x_[xe]);
  return StateVec(size(), std::move(ids));
}

std::string ComplementaryPair::to_string() const {
  return "pair(" + g_.to_string() + "," + h_.to_string() + ")";
}

ComplementaryPair make_complementary_pair(const AbelianGroup& g,
                                          const AbelianGroup& h) {
  return ComplementaryPair(g, h);
}

FinRel cnot_relation(const Groupoid& z, const Groupoid& x,
                     std::span<const Index> recode) {
  const std::size_t n = z.size();
  if (x.size() != n || recode.size() != n) {
    throw InvalidInput("Z and X structures must share one underlying set");
  }
  const std::vector<Index> from_x = invert_permutation(recode);
  std::vector<IndexPair> pairs;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const auto prod = z.multiply(a, b);
      if (!prod) continue;
      for (Index y = 0; y < n; ++y) {
        const auto by = x.multiply(recode[b], recode[y]);
        if (!by) continue;
        pairs.emplace_back(flat_pair(*prod, y, n),
                           flat_pair(a, from_x[*by], n));
      }
    }
  }
  return FinRel(n * n, n * n, std::move(pairs));
}

FinRel cnot(const ComplementaryPair& pair) {
  return cnot_relation(pair.z(), pair.x(), pair.x_recode());
}

bool is_complementary(const Groupoid& z, const Groupoid& x,
                      std::span<const Index> recode) {
  return is_unitary(cnot_relation(z, x, recode));
}

FinRel fourier_rel(const ComplementaryPair& pair) {
  const std::size_t n = pair.g().order();
  if (n != pair.h().order()) {
    throw UnsupportedPair(
        "no unitary Fourier relation for " + pair.to_string() +
        " (|G| != |H|); prepare X-classical states directly instead");
  }
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < n; ++g) {
      pairs.emplace_back(flat_pair(i, g, n), flat_pair(g, i, n));
    }
  }
  return FinRel(n * n, n * n, std::move(pairs));
}

}  // namespace qcrel
