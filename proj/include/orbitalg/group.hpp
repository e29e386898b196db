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

#ifndef ORBITALG_GROUP_HPP
#define ORBITALG_GROUP_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitalg/error.hpp"
#include "orbitalg/permutation.hpp"

namespace orbitalg {

using BigInt = boost::multiprecision::cpp_int;

// Spanning tree of one orbit. Edge (parent -> child) is labelled with the
// index of a generator g such that parent^g = child, so the transversal
// element u_x (root^u_x = x) is the product of labels along the root path.
class SchreierTree {
 public:
  static constexpr std::int32_t kRoot = -1;
  static constexpr std::int32_t kAbsent = -2;

  SchreierTree() = default;
  SchreierTree(std::size_t degree, Point root)
      : root_(root), label_(degree, kAbsent), parent_(degree, root) {
    label_[root] = kRoot;
    orbit_.push_back(root);
  }

  Point root() const { return root_; }
  bool contains(Point x) const { return label_[x] != kAbsent; }
  std::span<const Point> orbit() const { return orbit_; }
  std::int32_t label(Point x) const { return label_[x]; }
  Point parent(Point x) const { return parent_[x]; }

  // Grows the orbit after generators [first_new, gens.size()) were appended.
  void extend(std::span<const Permutation> gens, std::size_t first_new = 0) {
    const std::size_t old = orbit_.size();
    for (std::size_t k = 0; k < old; ++k)
      for (std::size_t g = first_new; g < gens.size(); ++g) visit(orbit_[k], gens, g);
    for (std::size_t k = old; k < orbit_.size(); ++k)
      for (std::size_t g = 0; g < gens.size(); ++g) visit(orbit_[k], gens, g);
  }

  // u_x with root^u_x = x.
  Permutation transversal(Point x, std::span<const Permutation> gens) const {
    std::vector<std::int32_t> path;
    for (Point y = x; label_[y] != kRoot; y = parent_[y]) path.push_back(label_[y]);
    Permutation u = Permutation::identity(label_.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) u *= gens[*it];
    return u;
  }

  // h := h * u_x^{-1}, walking up from x using the inverse generators.
  void strip(Permutation& h, Point x, std::span<const Permutation> inverses) const {
    for (Point y = x; label_[y] != kRoot; y = parent_[y]) h *= inverses[label_[y]];
  }

 private:
  void visit(Point from, std::span<const Permutation> gens, std::size_t g) {
    Point to = gens[g][from];
    if (label_[to] != kAbsent) return;
    label_[to] = static_cast<std::int32_t>(g);
    parent_[to] = from;
    orbit_.push_back(to);
  }

  Point root_ = 0;
  std::vector<std::int32_t> label_;
  std::vector<Point> parent_;
  std::vector<Point> orbit_;
};

// An orbit together with the generators that label its Schreier tree.
class Orbit {
 public:
  Orbit(std::size_t degree, Point point, std::vector<Permutation> generators)
      : generators_(std::move(generators)), tree_(degree, point) {
    tree_.extend(generators_);
  }

  Point point() const { return tree_.root(); }
  std::span<const Point> points() const { return tree_.orbit(); }
  std::size_t size() const { return tree_.orbit().size(); }
  bool contains(Point x) const { return tree_.contains(x); }
  Permutation transversal(Point x) const { return tree_.transversal(x, generators_); }
  const SchreierTree& tree() const { return tree_; }
  std::span<const Permutation> generators() const { return generators_; }

 private:
  std::vector<Permutation> generators_;
  SchreierTree tree_;
};

// Base and strong generating set built by deterministic Schreier-Sims.
//
// Level i holds base point b_i, the strong generators fixing b_0..b_{i-1},
// and the Schreier tree of the basic orbit b_i^{G_i}. New base points are the
// smallest point moved by the element that required them.
namespace detail {

enum class Giant { Alternating, Symmetric };

// Point-stabilizer generators of a transitive group via Schreier's lemma,
// then a check that they act transitively on the remaining points.
inline bool two_transitive(std::size_t n, std::span<const Permutation> gens) {
  std::vector<std::vector<Point>> u(n);  // u[x]: element carrying 0 to x
  std::vector<Point> queue{0};
  u[0].resize(n);
  for (std::size_t z = 0; z < n; ++z) u[0][z] = static_cast<Point>(z);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Point x = queue[k];
    for (const auto& g : gens) {
      const Point y = g[x];
      if (!u[y].empty()) continue;
      u[y].resize(n);
      for (std::size_t z = 0; z < n; ++z) u[y][z] = g[u[x][z]];
      queue.push_back(y);
    }
  }
  if (queue.size() != n) return false;
  if (n < 3) return true;
  // Orbit of point 1 under u_x g u_{xg}^{-1}; only images of orbit members matter.
  std::vector<std::vector<Point>> inv(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) inv[x][u[x][z]] = static_cast<Point>(z);
  std::vector<bool> seen(n, false);
  std::vector<Point> orbit{1};
  seen[1] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& g : gens) {
        const Point y = inv[g[x]][g[u[x][orbit[k]]]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
  return orbit.size() == n - 1;
}

// True if some power of g is a single p-cycle with p prime.
inline std::optional<std::size_t> prime_cycle_power(const Permutation& g) {
  std::vector<std::size_t> lengths;
  for (const auto& c : g.cycles()) lengths.push_back(c.size());
  auto is_prime = [](std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::size_t p = lengths[i];
    if (!is_prime(p)) continue;
    bool alone = true;
    for (std::size_t j = 0; j < lengths.size() && alone; ++j)
      if (j != i && lengths[j] % p == 0) alone = false;
    if (alone) return p;
  }
  return std::nullopt;
}

inline bool is_odd(const Permutation& g) {
  std::size_t transpositions = 0;
  for (const auto& c : g.cycles()) transpositions += c.size() - 1;
  return transpositions % 2;
}

struct GiantAction {
  Giant kind;
  std::vector<Point> support;  // ascending; every other point is fixed
};

// Jordan: a primitive group of degree m containing a p-cycle, p prime and
// p <= m - 3, contains Alt(m). Two-transitivity stands in for primitivity.
// The group may fix points outside its support.
inline std::optional<GiantAction> recognize_giant(std::size_t n, std::span<const Permutation> gens) {
  constexpr std::size_t kMinDegree = 8, kMaxGiantDegree = 4096;
  std::vector<Point> support;
  std::vector<Point> index(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool moved = false;
    for (const auto& g : gens) moved = moved || g[static_cast<Point>(x)] != x;
    if (moved) {
      index[x] = static_cast<Point>(support.size());
      support.push_back(static_cast<Point>(x));
    }
  }
  const std::size_t m = support.size();
  if (m < kMinDegree || m > kMaxGiantDegree) return std::nullopt;
  bool cycle = false;
  for (const auto& g : gens) {
    auto p = prime_cycle_power(g);
    if (p && *p + 3 <= m) cycle = true;
  }
  if (!cycle) return std::nullopt;
  std::vector<Permutation> local;
  for (const auto& g : gens) {
    std::vector<Point> images(m);
    for (std::size_t i = 0; i < m; ++i) images[i] = index[g[support[i]]];
    local.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  if (!two_transitive(m, local)) return std::nullopt;
  for (const auto& g : gens)
    if (is_odd(g)) return GiantAction{Giant::Symmetric, std::move(support)};
  return GiantAction{Giant::Alternating, std::move(support)};
}

}  // namespace detail

class StabilizerChain {
 public:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<Permutation> inverses;
    SchreierTree tree;
    std::vector<std::uint32_t> tested;  // per orbit point: generators already checked
    // Image arrays of u_x^{-1} for orbit points x, while the chain's budget
    // allows; otherwise transversals are recomputed from the tree.
    std::vector<std::vector<Point>> inverse_transversals;
    std::size_t cached = 0;
    bool explicit_transversals = true;
  };

  // Points stored across all explicit transversals (256 MiB).
  static constexpr std::size_t kTransversalBudget = std::size_t{1} << 26;

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {})
      : degree_(degree) {
    for (Point b : base_prefix) {
      if (b >= degree) throw InputError("base point out of range");
      append_level(b);
    }
    std::vector<Permutation> strong;
    for (const auto& g : generators)
      if (!g.is_identity()) strong.push_back(g);
    if (auto giant = detail::recognize_giant(degree, strong)) {
      build_giant(base_prefix, *giant);
      return;
    }
    if (levels_.empty() && !strong.empty()) {
      Point first = static_cast<Point>(degree);
      for (const auto& g : strong) first = std::min(first, *g.smallest_moved_point());
      append_level(first);
    }
    for (const auto& g : strong) {
      if (fixes_base(g, levels_.size())) append_level(*g.smallest_moved_point());
    }
    for (const auto& g : strong) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        levels_[l].gens.push_back(g);
        levels_[l].inverses.push_back(g.inverse());
        if (g[levels_[l].base] != levels_[l].base) break;
      }
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      levels_[l].tree.extend(levels_[l].gens);
      cache_transversals(l);
    }
    complete();
  }

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& level : levels_) b.push_back(level.base);
    return b;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& level : levels_) o *= level.tree.orbit().size();
    return o;
  }

  // Strips g through levels [start, depth). Returns the residue and the
  // level at which stripping stopped (depth() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      Point beta = g[levels_[l].base];
      if (!levels_[l].tree.contains(beta)) return {std::move(g), l};
      strip(l, g, beta);
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).first.is_identity();
  }

  // Strong generators of the stabilizer of b_0..b_{i-1}; empty means trivial.
  std::span<const Permutation> stabilizer_generators(std::size_t i) const {
    if (i >= levels_.size()) return {};
    return levels_[i].gens;
  }

 private:
  bool fixes_base(const Permutation& g, std::size_t upto) const {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels_[l].base] != levels_[l].base) return false;
    return true;
  }

  void append_level(Point b) {
    levels_.push_back(Level{b, {}, {}, SchreierTree(degree_, b), std::vector<std::uint32_t>(degree_, 0), {}, 0, true});
  }

  // Writes down a chain for Sym or Alt on the support: prefix points first,
  // then the rest of the support ascending. Base points outside the part of
  // the support still moved give trivial levels.
  void build_giant(std::span<const Point> prefix, const detail::GiantAction& giant) {
    levels_.clear();
    const bool symmetric = giant.kind == detail::Giant::Symmetric;
    const std::size_t fixed_tail = symmetric ? 1 : 2;  // |R| at which the giant on R is trivial
    std::vector<Point> rest = giant.support;           // R, ascending
    auto giant_gens = [&](const std::vector<Point>& c) {  // generators of the giant on c
      std::vector<Permutation> gens;
      const std::size_t m = c.size();
      auto cyc = [&](std::size_t from, std::size_t to) {
        return Permutation::from_cycles(degree_, {std::vector<Point>(c.begin() + static_cast<std::ptrdiff_t>(from),
                                                                     c.begin() + static_cast<std::ptrdiff_t>(to))});
      };
      if (m <= fixed_tail) return gens;
      if (symmetric) {
        gens.push_back(cyc(0, 2));
        if (m >= 3) gens.push_back(cyc(0, m));
      } else {
        gens.push_back(cyc(0, 3));
        if (m >= 4) gens.push_back(m % 2 ? cyc(0, m) : cyc(1, m));
      }
      return gens;
    };
    auto add_level = [&](Point b) {
      std::vector<Point> c;
      auto it = std::find(rest.begin(), rest.end(), b);
      const bool moved = it != rest.end() && rest.size() > fixed_tail;
      if (moved) c.push_back(b);
      for (Point x : rest)
        if (!moved || x != b) c.push_back(x);
      append_level(b);
      Level& level = levels_.back();
      for (auto& g : giant_gens(c)) {
        level.inverses.push_back(g.inverse());
        level.gens.push_back(std::move(g));
      }
      level.tree.extend(level.gens);
      for (Point x : level.tree.orbit()) level.tested[x] = static_cast<std::uint32_t>(level.gens.size());
      cache_transversals(levels_.size() - 1);
      if (moved) rest.erase(std::find(rest.begin(), rest.end(), b));
    };
    for (Point b : prefix) add_level(b);
    while (rest.size() > fixed_tail) add_level(rest.front());
  }

  void add_generator(const Permutation& h, std::size_t from, std::size_t to) {
    if (to == levels_.size()) append_level(*h.smallest_moved_point());
    for (std::size_t l = from; l <= to; ++l) {
      auto& level = levels_[l];
      level.gens.push_back(h);
      level.inverses.push_back(h.inverse());
      level.tree.extend(level.gens, level.gens.size() - 1);
      cache_transversals(l);
    }
  }

  void cache_transversals(std::size_t l) {
    Level& level = levels_[l];
    if (!level.explicit_transversals) return;
    const auto orbit = level.tree.orbit();
    if (level.inverse_transversals.empty()) level.inverse_transversals.resize(degree_);
    for (; level.cached < orbit.size(); ++level.cached) {
      if (cache_used_ + degree_ > kTransversalBudget) {
        cache_used_ -= level.cached * degree_;
        level.inverse_transversals = {};
        level.cached = 0;
        level.explicit_transversals = false;
        return;
      }
      const Point x = orbit[level.cached];
      auto& dst = level.inverse_transversals[x];
      dst.resize(degree_);
      if (x == level.base) {
        for (std::size_t y = 0; y < degree_; ++y) dst[y] = static_cast<Point>(y);
      } else {
        // u_x = u_parent * g, so u_x^{-1}(y) = u_parent^{-1}(g^{-1}(y)).
        const auto& src = level.inverse_transversals[level.tree.parent(x)];
        const auto& ginv = level.inverses[static_cast<std::size_t>(level.tree.label(x))];
        for (std::size_t y = 0; y < degree_; ++y) dst[y] = src[ginv[static_cast<Point>(y)]];
      }
      cache_used_ += degree_;
    }
  }

  // h := h * u_beta^{-1} at level l.
  void strip(std::size_t l, Permutation& h, Point beta) const {
    const Level& level = levels_[l];
    if (level.explicit_transversals) h *= level.inverse_transversals[beta];
    else level.tree.strip(h, beta, level.inverses);
  }

  // u_beta * s * u_{beta^s}^{-1}.
  Permutation schreier_generator(std::size_t l, Point beta, std::size_t s) const {
    const Level& level = levels_[l];
    const Permutation& gen = level.gens[s];
    if (!level.explicit_transversals) {
      Permutation h = level.tree.transversal(beta, level.gens) * gen;
      level.tree.strip(h, gen[beta], level.inverses);
      return h;
    }
    const auto& inv_beta = level.inverse_transversals[beta];
    const auto& inv_gamma = level.inverse_transversals[gen[beta]];
    std::vector<Point> u(degree_);
    for (std::size_t y = 0; y < degree_; ++y) u[inv_beta[y]] = static_cast<Point>(y);
    for (auto& x : u) x = inv_gamma[gen[x]];
    return Permutation::from_images_unchecked(std::move(u));
  }

  // Every Schreier generator of every level must sift to the identity
  // through the levels below it.
  void complete() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool extended = false;
      auto& level = levels_[i];
      for (std::size_t k = 0; !extended && k < level.tree.orbit().size(); ++k) {
        const Point beta = level.tree.orbit()[k];
        while (level.tested[beta] < level.gens.size()) {
          const std::size_t s = level.tested[beta]++;
          const Point gamma = level.gens[s][beta];
          // A tree edge beta -> gamma gives the identity.
          if (level.tree.parent(gamma) == beta && level.tree.label(gamma) == static_cast<std::int32_t>(s)) continue;
          auto [residue, stop] = sift(schreier_generator(static_cast<std::size_t>(i), beta, s), static_cast<std::size_t>(i) + 1);
          if (!residue.is_identity()) {
            add_generator(residue, static_cast<std::size_t>(i) + 1, stop);
            i = static_cast<std::ptrdiff_t>(stop);
            extended = true;
            break;
          }
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
  std::size_t cache_used_ = 0;
};

// Free-form key/value annotations carried by group files ("# primitive: yes").
using Metadata = std::map<std::string, std::string>;

// A permutation group given by generators of a common degree. Immutable; the
// stabilizer chain is built once on first use and shared between copies.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, Metadata metadata = {})
      : degree_(degree), generators_(std::move(generators)), metadata_(std::move(metadata)),
        cache_(std::make_shared<ChainCache>()) {
    if (degree == 0) throw InputError("degree must be positive");
    if (degree > kMaxDegree) throw InputError("degree " + std::to_string(degree) + " exceeds 2^20");
    if (generators_.empty()) throw InputError("a group needs at least one generator");
    for (const auto& g : generators_)
      if (g.degree() != degree) throw InputError("generator degree does not match group degree");
  }

  static PermutationGroup trivial(std::size_t degree) {
    return PermutationGroup(degree, {Permutation::identity(degree)});
  }

  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  const Metadata& metadata() const { return metadata_; }
  std::string name() const {
    auto it = metadata_.find("name");
    return it == metadata_.end() ? std::string("group") : it->second;
  }

  const StabilizerChain& chain() const {
    std::call_once(cache_->once, [&] {
      cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
    });
    return *cache_->chain;
  }

  StabilizerChain chain_with_base(std::span<const Point> prefix) const {
    return StabilizerChain(degree_, generators_, prefix);
  }

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  Metadata metadata_;
  std::shared_ptr<ChainCache> cache_;
};

inline Orbit orbit(const PermutationGroup& group, Point point) {
  if (point >= group.degree()) throw InputError("point out of range");
  return Orbit(group.degree(), point, {group.generators().begin(), group.generators().end()});
}

inline bool is_transitive(const PermutationGroup& group) {
  return orbit(group, 0).size() == group.degree();
}

inline BigInt order(const PermutationGroup& group) { return group.chain().order(); }

inline PermutationGroup point_stabilizer(const PermutationGroup& group, Point point) {
  if (point >= group.degree()) throw InputError("point out of range");
  const Point prefix[] = {point};
  StabilizerChain chain = group.chain_with_base(prefix);
  auto gens = chain.stabilizer_generators(1);
  if (gens.empty()) return PermutationGroup::trivial(group.degree());
  return PermutationGroup(group.degree(), {gens.begin(), gens.end()});
}

}  // namespace orbitalg

#endif  // ORBITALG_GROUP_HPP
