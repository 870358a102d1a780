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

#include "qcrel/structmaps.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

#include "qcrel/errors.hpp"

namespace qcrel {

StructuredRel::StructuredRel(FinRel rel, Groupoid source, Groupoid target)
    : rel_(std::move(rel)),
      source_(std::move(source)),
      target_(std::move(target)) {
  if (rel_.dom() != source_.size() || rel_.cod() != target_.size()) {
    throw InvalidInput("relation " + std::to_string(rel_.dom()) + "->" +
                       std::to_string(rel_.cod()) + " does not fit " +
                       source_.to_string() + " -> " + target_.to_string());
  }
}

StructuredRel StructuredRel::converse() const {
  return StructuredRel(qcrel::converse(rel_), target_, source_);
}

namespace {

using Subset = std::vector<Index>;

Subset set_product(const Groupoid& g, const Subset& a, const Subset& b) {
  Subset out;
  for (Index x : a) {
    for (Index y : b) {
      if (auto p = g.multiply(x, y)) out.push_back(*p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subset> preimages(const FinRel& r) {
  std::vector<Subset> pre(r.cod());
  for (const auto& [a, b] : r.pairs()) pre[b].push_back(a);
  return pre;
}

}  // namespace

bool is_groupoid_hom_relation(const StructuredRel& s) {
  const Groupoid& src = s.source();
  const Groupoid& tgt = s.target();
  std::vector<Subset> img(src.size());
  for (Index x = 0; x < src.size(); ++x) img[x] = s.rel().image_of(x);

  for (Index x = 0; x < src.size(); ++x) {
    for (Index y = 0; y < src.size(); ++y) {
      const auto p = src.multiply(x, y);
      const Subset lhs = p ? img[*p] : Subset{};
      if (lhs != set_product(tgt, img[x], img[y])) return false;
    }
  }
  return true;
}

bool is_surjective_on_objects(const StructuredRel& s) {
  std::vector<char> hit(s.target().copies(), 0);
  for (const auto& p : s.rel().pairs()) hit[s.target().copy_of(p.second)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_monoid_hom_relation(const StructuredRel& s) {
  const FinRel& r = s.rel();
  const bool mult_ok = then(mult_rel(s.source()), r) ==
                       then(tensor(r, r), mult_rel(s.target()));
  if (!mult_ok) return false;
  return then(unit_rel(s.source()).as_state(), r) ==
         unit_rel(s.target()).as_state();
}

std::optional<std::string> classical_failure(const StructuredRel& s) {
  const FinRel& r = s.rel();
  if (then(comult_rel(s.source()), tensor(r, r)) !=
      then(r, comult_rel(s.target()))) {
    return "comultiplication";
  }
  if (then(r, counit_rel(s.target())) != counit_rel(s.source())) {
    return "counit";
  }
  return std::nullopt;
}

bool is_classical_relation(const StructuredRel& s) {
  return !classical_failure(s).has_value();
}

bool is_self_conjugate(const StructuredRel& s) {
  const auto pre = preimages(s.rel());
  for (Index t = 0; t < s.target().size(); ++t) {
    Subset inverted;
    for (Index a : pre[s.target().inverse(t)]) {
      inverted.push_back(s.source().inverse(a));
    }
    std::sort(inverted.begin(), inverted.end());
    if (inverted != pre[t]) return false;
  }
  return true;
}

RelationVerdicts check_all(const StructuredRel& s) {
  return RelationVerdicts{
      .groupoid_hom = is_groupoid_hom_relation(s),
      .surjective_on_objects = is_surjective_on_objects(s),
      .monoid_hom = is_monoid_hom_relation(s),
      .classical = is_classical_relation(s),
      .self_conjugate = is_self_conjugate(s),
  };
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("QCREL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Pointwise comonoid-homomorphism test on a relation given as one target
// bitmask per source row. Equivalent to classical_failure() == nullopt.
class ClassicalTester {
 public:
  ClassicalTester(const Groupoid& src, const Groupoid& tgt)
      : src_(src), tgt_(tgt), m_(tgt.size()) {
    for (Index t : tgt.identities()) target_ids_ |= bit(t);
    for (Index x = 0; x < src.size(); ++x) {
      factorizations_.emplace_back();
      for (Index a = 0; a < src.size(); ++a) {
        // a . b == x  <=>  b == a^-1 . x in the same copy
        if (src.copy_of(a) != src.copy_of(x)) continue;
        factorizations_.back().emplace_back(
            a, *src.multiply(src.inverse(a), x));
      }
    }
  }

  static std::uint64_t bit(Index i) { return std::uint64_t{1} << i; }

  bool counit_row_ok(Index x, std::uint64_t row) const {
    return ((row & target_ids_) != 0) == src_.is_identity(x);
  }

  bool operator()(std::span<const std::uint64_t> rows) const {
    for (Index x = 0; x < rows.size(); ++x) {
      if (!counit_row_ok(x, rows[x])) return false;
    }
    std::vector<std::uint64_t> lhs(m_), rhs(m_);
    for (Index x = 0; x < rows.size(); ++x) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      // lhs: pairs (c, d) with c in R(a), d in R(b), a . b == x
      for (const auto& [a, b] : factorizations_[x]) {
        if (!rows[b]) continue;
        for (std::uint64_t ra = rows[a]; ra; ra &= ra - 1) {
          lhs[std::countr_zero(ra)] |= rows[b];
        }
      }
      // rhs: pairs (c, d) with c . d in R(x)
      for (std::uint64_t rx = rows[x]; rx; rx &= rx - 1) {
        const Index t = static_cast<Index>(std::countr_zero(rx));
        for (Index c = 0; c < m_; ++c) {
          if (tgt_.copy_of(c) != tgt_.copy_of(t)) continue;
          rhs[c] |= bit(*tgt_.multiply(tgt_.inverse(c), t));
        }
      }
      if (lhs != rhs) return false;
    }
    return true;
  }

 private:
  const Groupoid& src_;
  const Groupoid& tgt_;
  std::size_t m_;
  std::uint64_t target_ids_ = 0;
  std::vector<std::vector<IndexPair>> factorizations_;
};

FinRel rows_to_rel(std::span<const std::uint64_t> rows, std::size_t m) {
  std::vector<IndexPair> pairs;
  for (Index x = 0; x < rows.size(); ++x) {
    for (std::uint64_t r = rows[x]; r; r &= r - 1) {
      pairs.emplace_back(x, static_cast<Index>(std::countr_zero(r)));
    }
  }
  return FinRel(rows.size(), m, std::move(pairs));
}

}  // namespace

std::vector<FinRel> enumerate_classical_relations(
    const Groupoid& source, const Groupoid& target,
    const EnumerateOptions& options) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * m;
  if (bits > options.budget_bits || bits > 62 || m > 63) {
    throw BudgetExceeded(bits, std::min<std::uint64_t>(options.budget_bits,
                                                       62));
  }

  const ClassicalTester test(source, target);
  std::vector<std::vector<std::uint64_t>> choices(n);
  for (Index x = 0; x < n; ++x) {
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << m); ++row) {
      if (!options.prune || test.counit_row_ok(x, row)) {
        choices[x].push_back(row);
      }
    }
  }
  std::uint64_t total = 1;
  for (const auto& c : choices) total *= c.size();

  const unsigned threads = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(options.threads),
                              std::max<std::uint64_t>(total, 1)));
  std::vector<std::vector<FinRel>> found(threads);
  auto worker = [&](unsigned t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    std::vector<std::size_t> digit(n);
    std::vector<std::uint64_t> rows(n);
    std::uint64_t rem = begin;
    for (std::size_t x = n; x-- > 0;) {
      digit[x] = rem % choices[x].size();
      rem /= choices[x].size();
      rows[x] = choices[x][digit[x]];
    }
    for (std::uint64_t k = begin; k < end; ++k) {
      if (test(rows)) found[t].push_back(rows_to_rel(rows, m));
      for (std::size_t x = n; x-- > 0;) {
        if (++digit[x] < choices[x].size()) {
          rows[x] = choices[x][digit[x]];
          break;
        }
        digit[x] = 0;
        rows[x] = choices[x][0];
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::vector<FinRel> out;
  for (auto& part : found) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qcrel
