// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITALG_ORBITALS_HPP
#define ORBITALG_ORBITALS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitalg/bitmatrix.hpp"
#include "orbitalg/error.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/permutation.hpp"
#include "orbitalg/scheme.hpp"

namespace orbitalg {

struct Orbital {
  std::size_t index = 0;
  std::pair<Point, Point> rep;  // (base point, smallest member of the suborbit)
  std::size_t paired_index = 0;
  std::size_t valency = 0;

  bool self_paired() const { return paired_index == index; }
};

// Rows of every orbital as explicit 0/1 matrices, plus the pairing. This is
// what the axiom checks consume, so tests can hand in corrupted copies.
struct OrbitalRows {
  std::size_t n = 0;
  std::vector<BitMatrix> rows;
  std::vector<std::size_t> pairing;
};

// Orbitals of a transitive group on Omega x Omega, indexed as: the diagonal
// first, then suborbits of the stabilizer of point 0 sorted by (valency,
// smallest member). Rows are produced on demand from the suborbits and the
// Schreier tree of the orbit of point 0.
class OrbitalDecomposition {
 public:
  // Cache every orbital's rows when rank * n^2 / 8 bytes stays below this.
  static constexpr std::size_t kDefaultCacheBytes = std::size_t{4} << 30;

  explicit OrbitalDecomposition(const PermutationGroup& group, std::size_t cache_bytes = kDefaultCacheBytes)
      : group_(group), base_orbit_(orbit(group, 0)), cache_(std::make_shared<RowCache>()) {
    const std::size_t n = group.degree();
    if (base_orbit_.size() != n) throw InputError("group is not transitive");

    const Point prefix[] = {0};
    StabilizerChain chain = group.chain_with_base(prefix);
    order_ = chain.order();
    auto stab = chain.stabilizer_generators(1);

    // Suborbits of G_0, discovered from increasing start points.
    std::vector<std::int32_t> raw(n, -1);
    std::vector<std::vector<Point>> suborbits;
    for (Point start = 0; start < n; ++start) {
      if (raw[start] >= 0) continue;
      const auto id = static_cast<std::int32_t>(suborbits.size());
      std::vector<Point> members{start};
      raw[start] = id;
      for (std::size_t k = 0; k < members.size(); ++k)
        for (const auto& g : stab) {
          Point y = g[members[k]];
          if (raw[y] < 0) {
            raw[y] = id;
            members.push_back(y);
          }
        }
      std::sort(members.begin(), members.end());
      suborbits.push_back(std::move(members));
    }
    // suborbits[0] is {0}; sort the rest by (size, smallest member).
    std::vector<std::size_t> perm(suborbits.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin() + 1, perm.end(), [&](std::size_t a, std::size_t b) {
      if (suborbits[a].size() != suborbits[b].size()) return suborbits[a].size() < suborbits[b].size();
      return suborbits[a].front() < suborbits[b].front();
    });
    std::vector<std::size_t> new_index(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_index[perm[i]] = i;

    label_.resize(n);
    for (std::size_t p = 0; p < n; ++p) label_[p] = new_index[raw[p]];
    members_.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) members_[i] = std::move(suborbits[perm[i]]);

    orbitals_.resize(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const Point beta = members_[i].front();
      orbitals_[i].index = i;
      orbitals_[i].rep = {0, beta};
      orbitals_[i].valency = members_[i].size();
      // (0, beta) maps under u_beta^{-1} to (0^{u_beta^{-1}}, 0).
      const Point back = base_orbit_.transversal(beta).inverse()[0];
      orbitals_[i].paired_index = label_[back];
    }
    for (const auto& o : orbitals_)
      if (orbitals_[o.paired_index].paired_index != o.index)
        throw InconsistencyError("orbital pairing is not an involution");

    cache_enabled_ = static_cast<double>(rank()) * n * n / 8.0 < static_cast<double>(cache_bytes);
  }

  const PermutationGroup& group() const { return group_; }
  std::size_t degree() const { return label_.size(); }
  Point base_point() const { return 0; }
  std::size_t rank() const { return orbitals_.size(); }
  const BigInt& group_order() const { return order_; }
  std::span<const Orbital> orbitals() const { return orbitals_; }
  const Orbital& orbital(std::size_t i) const { return orbitals_[i]; }
  std::span<const Point> suborbit(std::size_t i) const { return members_[i]; }
  std::size_t label(Point beta) const { return label_[beta]; }

  std::vector<std::size_t> valencies() const {
    std::vector<std::size_t> v;
    for (const auto& o : orbitals_) v.push_back(o.valency);
    return v;
  }

  // Visits every vertex gamma together with some u in G with 0^u = gamma,
  // depth-first along the Schreier tree of point 0.
  template <class Visit>
  void for_each_transversal(Visit&& visit) const {
    const std::size_t n = degree();
    const auto& tree = base_orbit_.tree();
    const auto gens = base_orbit_.generators();
    std::vector<std::size_t> offset(n + 1, 0);
    for (Point x : tree.orbit())
      if (x != tree.root()) ++offset[tree.parent(x) + 1];
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] += offset[i];
    std::vector<Point> children(n);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (Point x : tree.orbit())
      if (x != tree.root()) children[fill[tree.parent(x)]++] = x;

    std::vector<std::pair<Point, Permutation>> stack;
    stack.emplace_back(tree.root(), Permutation::identity(n));
    while (!stack.empty()) {
      auto [x, u] = std::move(stack.back());
      stack.pop_back();
      for (std::size_t c = offset[x]; c < offset[x + 1]; ++c)
        stack.emplace_back(children[c], u * gens[tree.label(children[c])]);
      visit(x, static_cast<const Permutation&>(u));
    }
  }

  // Rows of one orbital: row gamma = (suborbit)^{u_gamma}.
  BitMatrix rows(std::size_t i) const {
    if (cache_enabled_) return cached()[i];
    const std::size_t idx[] = {i};
    return build_union(idx);
  }

  bool caches_rows() const { return cache_enabled_; }

  // Bitwise OR of the rows of the given orbitals.
  BitMatrix union_rows(std::span<const std::size_t> subset) const {
    for (std::size_t i : subset)
      if (i >= rank()) throw InputError("orbital index out of range");
    if (!cache_enabled_) return build_union(subset);
    const auto& all = cached();
    BitMatrix m(degree(), degree());
    for (std::size_t i : subset) m |= all[i];
    return m;
  }

  OrbitalRows materialize() const {
    OrbitalRows out;
    out.n = degree();
    out.rows = cache_enabled_ ? cached() : build_all();
    for (const auto& o : orbitals_) out.pairing.push_back(o.paired_index);
    return out;
  }

 private:
  struct RowCache {
    std::once_flag once;
    std::vector<BitMatrix> rows;
  };

  const std::vector<BitMatrix>& cached() const {
    std::call_once(cache_->once, [&] { cache_->rows = build_all(); });
    return cache_->rows;
  }

  std::vector<BitMatrix> build_all() const {
    std::vector<BitMatrix> all(rank(), BitMatrix(degree(), degree()));
    for_each_transversal([&](Point gamma, const Permutation& u) {
      for (std::size_t i = 0; i < rank(); ++i)
        for (Point beta : members_[i]) all[i].set(gamma, u[beta]);
    });
    return all;
  }

  BitMatrix build_union(std::span<const std::size_t> subset) const {
    std::vector<Point> points;
    for (std::size_t i : subset) points.insert(points.end(), members_[i].begin(), members_[i].end());
    BitMatrix m(degree(), degree());
    for_each_transversal([&](Point gamma, const Permutation& u) {
      for (Point beta : points) m.set(gamma, u[beta]);
    });
    return m;
  }

  PermutationGroup group_;
  Orbit base_orbit_;
  BigInt order_;
  std::vector<std::size_t> label_;
  std::vector<std::vector<Point>> members_;
  std::vector<Orbital> orbitals_;
  bool cache_enabled_ = true;
  std::shared_ptr<RowCache> cache_;
};

inline OrbitalDecomposition decompose(const PermutationGroup& group) { return OrbitalDecomposition(group); }

inline std::vector<std::size_t> pairing(const OrbitalDecomposition& dec) {
  std::vector<std::size_t> p;
  for (const auto& o : dec.orbitals()) p.push_back(o.paired_index);
  return p;
}

// Orbit pairs of the pairing involution, e.g. {{0},{1},{2,3}}.
inline std::vector<std::vector<std::size_t>> pairing_cycles(const OrbitalDecomposition& dec) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& o : dec.orbitals()) {
    if (o.paired_index == o.index) out.push_back({o.index});
    else if (o.index < o.paired_index) out.push_back({o.index, o.paired_index});
  }
  return out;
}

inline CoherentConfiguration from_orbitals(const OrbitalDecomposition& dec, std::size_t cap = kDenseSchemeCap) {
  if (dec.degree() > cap)
    throw InputError("degree " + std::to_string(dec.degree()) + " exceeds the dense configuration cap " +
                     std::to_string(cap));
  return CoherentConfiguration::from_relation_rows(dec.materialize().rows);
}

struct AxiomViolation {
  int axiom;  // 1..4
  std::size_t x, y;
  std::string detail;
};

struct AxiomReport {
  bool identity = false;       // (i)   A_0 = I
  bool partition = false;      // (ii)  sum of A_i = J
  bool transpose = false;      // (iii) A_i^T = A_{pairing(i)}
  std::optional<bool> counts;  // (iv)  unset when skipped above the cap
  bool transpose_sampled = false;
  std::optional<AxiomViolation> violation;  // first violated axiom
  bool ok() const { return identity && partition && transpose && counts.value_or(true); }
};

struct AxiomOptions {
  std::size_t exhaustive_cap = 500;  // exhaustive (iii) and (iv) up to this degree
  std::size_t samples = 100000;      // sampled pairs for (iii) above the cap
  unsigned threads = 1;
};

inline AxiomReport verify_axioms(const OrbitalRows& r, const AxiomOptions& opt = {}) {
  AxiomReport rep;
  const std::size_t n = r.n;
  auto fail = [&](int axiom, std::size_t x, std::size_t y, std::string why) {
    if (!rep.violation) rep.violation = AxiomViolation{axiom, x, y, std::move(why)};
  };

  rep.identity = !r.rows.empty();
  for (std::size_t x = 0; x < n && rep.identity; ++x) {
    const BitRow row = r.rows[0].row(x);
    if (!row.test(x)) {
      rep.identity = false;
      fail(1, x, x, "diagonal pair missing from orbital 0");
    } else if (row.count() != 1) {
      std::size_t y = x;
      row.for_each([&](std::size_t c) { if (c != x && y == x) y = c; });
      rep.identity = false;
      fail(1, x, y, "orbital 0 contains an off-diagonal pair");
    }
  }

  rep.partition = true;
  BitSet acc(n);
  for (std::size_t x = 0; x < n && rep.partition; ++x) {
    acc.clear();
    auto accw = acc.words();
    for (std::size_t i = 0; i < r.rows.size() && rep.partition; ++i) {
      auto w = r.rows[i].row(x).words();
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (Word both = accw[k] & w[k]) {
          rep.partition = false;
          fail(2, x, k * kWordBits + std::countr_zero(both), "pair lies in two orbitals");
          break;
        }
        accw[k] |= w[k];
      }
    }
    if (rep.partition && acc.view().count() != n) {
      std::size_t y = 0;
      while (acc.test(y)) ++y;
      rep.partition = false;
      fail(2, x, y, "pair lies in no orbital");
    }
  }

  rep.transpose = r.pairing.size() == r.rows.size();
  for (std::size_t i = 0; i < r.pairing.size() && rep.transpose; ++i)
    if (r.pairing[i] >= r.pairing.size() || r.pairing[r.pairing[i]] != i) {
      rep.transpose = false;
      fail(3, 0, 0, "pairing is not an involution at orbital " + std::to_string(i));
    }
  if (rep.transpose) {
    auto check_pair = [&](std::size_t x, std::size_t y) {
      for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (r.rows[i].test(x, y) != r.rows[r.pairing[i]].test(y, x)) {
          rep.transpose = false;
          fail(3, x, y, "orbital " + std::to_string(i) + " transposed differs from its pair");
          return false;
        }
      return true;
    };
    if (n <= opt.exhaustive_cap) {
      for (std::size_t x = 0; x < n && rep.transpose; ++x)
        for (std::size_t y = 0; y < n && check_pair(x, y); ++y) {}
    } else {
      rep.transpose_sampled = true;
      std::mt19937_64 rng(0x6f72626974616c73ull);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < opt.samples && rep.transpose; ++s) {
        std::size_t x = pick(rng), y = pick(rng);
        check_pair(x, y);
      }
    }
  }

  if (n <= opt.exhaustive_cap && rep.partition) {
    auto cfg = CoherentConfiguration::from_relation_rows(r.rows);
    auto res = intersection_numbers(cfg, opt.threads);
    rep.counts = res.ok();
    if (!res.ok()) {
      const auto& v = *res.violation;
      fail(4, v.x2, v.y2,
           "p(" + std::to_string(v.i) + "," + std::to_string(v.j) + ") is " + std::to_string(v.found) +
               " here but " + std::to_string(v.expected) + " at (" + std::to_string(v.x + 1) + "," +
               std::to_string(v.y + 1) + ")");
    }
  }
  return rep;
}

inline AxiomReport verify_axioms(const OrbitalDecomposition& dec, const AxiomOptions& opt = {}) {
  return verify_axioms(dec.materialize(), opt);
}

}  // namespace orbitalg

#endif  // ORBITALG_ORBITALS_HPP
