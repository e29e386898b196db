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

#ifndef ORBITALG_GRAPH_HPP
#define ORBITALG_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitalg/bitmatrix.hpp"
#include "orbitalg/error.hpp"
#include "orbitalg/parallel.hpp"
#include "orbitalg/scheme.hpp"

namespace orbitalg {

// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
class Graph {
 public:
  Graph() = default;

  // Throws InputError unless `adjacency` is square, symmetric, loop-free.
  explicit Graph(BitMatrix adjacency) : adj_(std::move(adjacency)) {
    if (adj_.rows() != adj_.cols()) throw InputError("adjacency matrix is not square");
    for (std::size_t x = 0; x < n(); ++x) {
      if (adj_.test(x, x)) throw InputError("loop at vertex " + std::to_string(x + 1));
      adj_.row(x).for_each([&](std::size_t y) {
        if (!adj_.test(y, x))
          throw InputError("adjacency is not symmetric at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
      });
    }
  }

  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    BitMatrix m(n, n);
    for (auto [x, y] : edges) {
      if (x >= n || y >= n) throw InputError("edge endpoint out of range");
      m.set(x, y);
      m.set(y, x);
    }
    return Graph(std::move(m));
  }

  std::size_t n() const { return adj_.rows(); }
  BitRow row(std::size_t x) const { return adj_.row(x); }
  bool adjacent(std::size_t x, std::size_t y) const { return adj_.test(x, y); }
  std::size_t degree(std::size_t x) const { return adj_.row(x).count(); }
  const BitMatrix& matrix() const { return adj_; }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t x = 0; x < n(); ++x) e += degree(x);
    return e / 2;
  }

  Graph complement() const {
    BitMatrix m(n(), n());
    for (std::size_t x = 0; x < n(); ++x)
      for (std::size_t y = 0; y < n(); ++y)
        if (x != y && !adj_.test(x, y)) m.set(x, y);
    return Graph(std::move(m));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitMatrix adj_;
};

struct SrgParams {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;

  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  SrgParams complement() const { return {v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lambda}; }
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

inline std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

// {b_0..b_{d-1}; c_1..c_d}.
struct IntersectionArray {
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> c;

  std::size_t diameter() const { return b.size(); }

  // k_0..k_d; throws InconsistencyError if the array is not admissible.
  std::vector<std::uint64_t> distance_sizes() const {
    if (b.size() != c.size() || b.empty()) throw InconsistencyError("intersection array has mismatched lengths");
    if (c[0] != 1) throw InconsistencyError("intersection array has c_1 != 1");
    std::vector<std::uint64_t> k{1};
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0 || c[i] == 0) throw InconsistencyError("intersection array has a zero entry");
      if ((k[i] * b[i]) % c[i] != 0) throw InconsistencyError("k_i recurrence is not integral");
      k.push_back(k[i] * b[i] / c[i]);
    }
    return k;
  }

  friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;
};

inline std::string to_string(const IntersectionArray& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.b.size(); ++i) s += (i ? "," : "") + std::to_string(a.b[i]);
  s += ";";
  for (std::size_t i = 0; i < a.c.size(); ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
  return s + "}";
}

struct DesignParams {
  std::uint64_t v = 0, k = 0, lambda = 0;
  friend auto operator<=>(const DesignParams&, const DesignParams&) = default;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

struct CheckOptions {
  unsigned threads = 1;
  Deadline deadline;
  std::size_t sample_stride = 1;  // > 1 checks only every stride-th vertex (exploration only)
};

// ---------------------------------------------------------------- regularity

struct RegularityResult {
  std::optional<std::size_t> degree;
  std::optional<VertexPair> witness;  // two vertices of different degree
};

inline RegularityResult check_regular(const Graph& g) {
  RegularityResult r;
  if (g.n() == 0) return r.degree = 0, r;
  const std::size_t k = g.degree(0);
  for (std::size_t x = 1; x < g.n(); ++x)
    if (g.degree(x) != k) return r.witness = VertexPair{0, x}, r;
  r.degree = k;
  return r;
}

// ---------------------------------------------------------------- distances

inline constexpr std::int32_t kUnreachable = -1;

struct BfsLevels {
  std::vector<std::int32_t> dist;
  std::vector<std::size_t> level_sizes;
};

// Breadth-first levels computed a whole frontier at a time with row ORs.
inline BfsLevels bfs_levels(const Graph& g, std::size_t source, std::vector<BitSet>* level_sets = nullptr) {
  const std::size_t n = g.n();
  BfsLevels out;
  out.dist.assign(n, kUnreachable);
  BitSet visited(n), frontier(n), next(n);
  visited.set(source);
  frontier.set(source);
  out.dist[source] = 0;
  std::vector<std::size_t> current{source};
  if (level_sets) level_sets->clear();
  for (std::int32_t d = 0; !current.empty(); ++d) {
    out.level_sizes.push_back(current.size());
    if (level_sets) level_sets->push_back(frontier);
    next.clear();
    auto nw = next.words();
    for (std::size_t x : current) {
      auto w = g.row(x).words();
      for (std::size_t k = 0; k < w.size(); ++k) nw[k] |= w[k];
    }
    auto vw = visited.words();
    for (std::size_t k = 0; k < nw.size(); ++k) {
      nw[k] &= ~vw[k];
      vw[k] |= nw[k];
    }
    current.clear();
    next.view().for_each([&](std::size_t y) {
      out.dist[y] = d + 1;
      current.push_back(y);
    });
    std::swap(frontier, next);
  }
  return out;
}

struct Components {
  std::size_t count = 0;
  std::vector<std::uint32_t> label;
};

inline Components components(const Graph& g) {
  Components c;
  c.label.assign(g.n(), 0xffffffffu);
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (c.label[s] != 0xffffffffu) continue;
    auto levels = bfs_levels(g, s);
    for (std::size_t y = 0; y < g.n(); ++y)
      if (levels.dist[y] != kUnreachable) c.label[y] = static_cast<std::uint32_t>(c.count);
    ++c.count;
  }
  return c;
}

// ---------------------------------------------------------------- SRG

struct SrgResult {
  std::optional<SrgParams> params;
  std::string reason;                 // set on rejection
  std::optional<VertexPair> witness;  // pair whose count disagrees
};

inline SrgResult check_srg(const Graph& g, const CheckOptions& opt = {}) {
  SrgResult res;
  auto reg = check_regular(g);
  if (!reg.degree) {
    res.reason = "not regular";
    res.witness = reg.witness;
    return res;
  }
  const std::size_t n = g.n();
  const std::size_t k = *reg.degree;
  if (k == 0) return res.reason = "degenerate: empty", res;
  if (k + 1 == n) return res.reason = "degenerate: complete", res;

  struct Seen {
    std::optional<std::pair<std::size_t, std::size_t>> lambda, mu;  // (count, y)
    std::optional<std::pair<bool, std::size_t>> conflict;           // (adjacent?, y)
  };
  const std::size_t stride = std::max<std::size_t>(1, opt.sample_stride);
  const std::size_t rows = (n + stride - 1) / stride;
  std::optional<std::pair<std::size_t, VertexPair>> lambda, mu;  // (count, first pair)
  ordered_scan(
      rows, opt.threads,
      [&](std::size_t idx) {
        const std::size_t x = idx * stride;
        Seen s;
        for (std::size_t y = stride == 1 ? x + 1 : 0; y < n; ++y) {
          if (y == x) continue;
          const std::size_t c = and_count(g.row(x), g.row(y));
          auto& slot = g.adjacent(x, y) ? s.lambda : s.mu;
          if (!slot) slot = {c, y};
          else if (slot->first != c) {
            s.conflict = {g.adjacent(x, y), y};
            break;
          }
        }
        return s;
      },
      [&](std::size_t idx, Seen s) {
        const std::size_t x = idx * stride;
        auto merge = [&](auto& global, const auto& local, const char* name) {
          if (!local) return true;
          if (!global) {
            global = {local->first, VertexPair{x, local->second}};
            return true;
          }
          if (global->first == local->first) return true;
          res.reason = std::string(name) + " not constant";
          res.witness = VertexPair{x, local->second};
          return false;
        };
        if (s.conflict) {
          res.reason = std::string(s.conflict->first ? "lambda" : "mu") + " not constant";
          res.witness = VertexPair{x, s.conflict->second};
          return false;
        }
        return merge(lambda, s.lambda, "lambda") && merge(mu, s.mu, "mu");
      },
      opt.deadline);
  if (!res.reason.empty()) return res;
  SrgParams p{n, k, lambda ? lambda->first : 0, mu ? mu->first : 0};
  if (!p.feasible()) throw InconsistencyError("SRG parameters " + to_string(p) + " violate k(k-l-1) = (v-k-1)mu");
  res.params = p;
  return res;
}

inline IntersectionArray srg_to_array(const SrgParams& p) {
  if (p.mu == 0) throw InputError("SRG with mu = 0 is disconnected and has no diameter-2 intersection array");
  return IntersectionArray{{p.k, p.k - 1 - p.lambda}, {1, p.mu}};
}

// First entry (x,y) where A^2 differs from kI + lambda A + mu (J - I - A).
inline std::optional<VertexPair> srg_identity_violation(const Graph& g, const SrgParams& p, unsigned threads = 1) {
  std::optional<VertexPair> bad;
  ordered_scan(
      g.n(), threads,
      [&](std::size_t x) -> std::optional<std::size_t> {
        for (std::size_t y = 0; y < g.n(); ++y) {
          const std::uint64_t square = and_count(g.row(x), g.row(y));
          const std::uint64_t expect = x == y ? p.k : g.adjacent(x, y) ? p.lambda : p.mu;
          if (square != expect) return y;
        }
        return std::nullopt;
      },
      [&](std::size_t x, std::optional<std::size_t> y) {
        if (y) bad = VertexPair{x, *y};
        return !y;
      });
  return bad;
}

// ---------------------------------------------------------------- DRG

struct DrgResult {
  std::optional<IntersectionArray> array;
  std::vector<std::uint64_t> distance_sizes;  // k_0..k_d
  std::string reason;
  std::optional<VertexPair> witness;  // (v, w) where b or c differs
};

inline DrgResult check_drg(const Graph& g, const CheckOptions& opt = {}) {
  DrgResult res;
  if (!check_regular(g).degree) return res.reason = "not regular", res;
  const std::size_t n = g.n();
  if (components(g).count > 1) return res.reason = "disconnected", res;
  if (n == 1) return res.reason = "degenerate: single vertex", res;

  struct Local {
    std::vector<std::uint64_t> b, c;  // indexed by distance 0..ecc
    std::vector<std::size_t> sizes;
    std::optional<std::size_t> conflict;  // w
  };
  const std::size_t stride = std::max<std::size_t>(1, opt.sample_stride);
  const std::size_t count = (n + stride - 1) / stride;
  std::optional<Local> global;
  std::size_t global_vertex = 0;
  ordered_scan(
      count, opt.threads,
      [&](std::size_t idx) {
        const std::size_t v = idx * stride;
        std::vector<BitSet> levels;
        auto bfs = bfs_levels(g, v, &levels);
        const std::size_t ecc = levels.size() - 1;
        Local loc;
        loc.sizes = bfs.level_sizes;
        loc.b.assign(ecc + 1, 0);
        loc.c.assign(ecc + 1, 0);
        std::vector<bool> set(ecc + 1, false);
        for (std::size_t w = 0; w < n; ++w) {
          const auto i = static_cast<std::size_t>(bfs.dist[w]);
          const std::uint64_t b = i < ecc ? and_count(g.row(w), levels[i + 1].view()) : 0;
          const std::uint64_t c = i > 0 ? and_count(g.row(w), levels[i - 1].view()) : 0;
          if (!set[i]) {
            loc.b[i] = b;
            loc.c[i] = c;
            set[i] = true;
          } else if (loc.b[i] != b || loc.c[i] != c) {
            loc.conflict = w;
            break;
          }
        }
        return loc;
      },
      [&](std::size_t idx, Local loc) {
        const std::size_t v = idx * stride;
        if (loc.conflict) {
          res.reason = "b_i or c_i not constant around vertex " + std::to_string(v + 1);
          res.witness = VertexPair{v, *loc.conflict};
          return false;
        }
        if (!global) {
          global = std::move(loc);
          global_vertex = v;
          return true;
        }
        if (loc.b != global->b || loc.c != global->c) {
          res.reason = "intersection numbers differ between vertices";
          res.witness = VertexPair{global_vertex, v};
          return false;
        }
        return true;
      },
      opt.deadline);
  if (!res.reason.empty()) return res;

  const std::size_t d = global->b.size() - 1;
  IntersectionArray a;
  a.b.assign(global->b.begin(), global->b.begin() + d);
  a.c.assign(global->c.begin() + 1, global->c.end());
  res.distance_sizes = a.distance_sizes();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    total += res.distance_sizes[i];
    if (res.distance_sizes[i] != global->sizes[i])
      throw InconsistencyError("k_i from the array disagrees with the BFS level sizes");
  }
  if (total != n) throw InconsistencyError("distance sizes do not sum to v");
  res.array = std::move(a);
  return res;
}

// Coloring of V x V by graph distance, for the association-scheme check.
inline CoherentConfiguration distance_configuration(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Color> colors(n * n);
  std::size_t diameter = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto bfs = bfs_levels(g, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (bfs.dist[y] == kUnreachable) throw InputError("distance partition needs a connected graph");
      colors[x * n + y] = static_cast<Color>(bfs.dist[y]);
      diameter = std::max<std::size_t>(diameter, bfs.dist[y]);
    }
  }
  return CoherentConfiguration(n, diameter + 1, std::move(colors));
}

// ---------------------------------------------------------------- designs

enum class Diagonal { One, Zero };

struct DesignResult {
  std::optional<DesignParams> params;
  std::string reason;
  std::optional<VertexPair> witness;  // two rows with the wrong overlap
};

// Reads N = A + I (Diagonal::One) or N = A (Diagonal::Zero) as the incidence
// matrix of a symmetric 2-design.
inline DesignResult check_symmetric_design(const Graph& g, Diagonal diagonal, unsigned threads = 1) {
  DesignResult res;
  const std::size_t n = g.n();
  BitMatrix incidence = g.matrix();
  if (diagonal == Diagonal::One)
    for (std::size_t x = 0; x < n; ++x) incidence.set(x, x);
  const std::size_t k = n ? incidence.row(0).count() : 0;
  for (std::size_t x = 1; x < n; ++x)
    if (incidence.row(x).count() != k) {
      res.reason = "row sums differ";
      res.witness = VertexPair{0, x};
      return res;
    }
  if (n < 2 || k == 0 || k == n) return res.reason = "trivial incidence matrix", res;
  std::optional<std::size_t> lambda;
  ordered_scan(
      n, threads,
      [&](std::size_t x) {
        std::vector<std::pair<std::size_t, std::size_t>> seen;  // (count, y): first and first differing
        for (std::size_t y = x + 1; y < n; ++y) {
          const std::size_t c = and_count(incidence.row(x), incidence.row(y));
          if (seen.empty()) seen.emplace_back(c, y);
          else if (c != seen.front().first) {
            seen.emplace_back(c, y);
            break;
          }
        }
        return seen;
      },
      [&](std::size_t x, std::vector<std::pair<std::size_t, std::size_t>> seen) {
        if (seen.size() > 1) {
          res.reason = "row " + std::to_string(x + 1) + " meets other rows in different numbers of points";
          res.witness = VertexPair{x, seen[1].second};
          return false;
        }
        if (seen.empty()) return true;
        if (!lambda) lambda = seen.front().first;
        if (*lambda != seen.front().first) {
          res.reason = "pairwise row intersections not constant";
          res.witness = VertexPair{x, seen.front().second};
          return false;
        }
        return true;
      });
  if (!res.reason.empty()) return res;
  if (*lambda == 0) return res.reason = "lambda = 0", res;
  DesignParams p{n, k, *lambda};
  if (p.lambda * (p.v - 1) != p.k * (p.k - 1))
    throw InconsistencyError("design parameters violate lambda(v-1) = k(k-1)");
  res.params = p;
  return res;
}

// Symmetric design predicted by SRG parameters: A + I needs lambda + 2 = mu,
// A needs lambda = mu.
inline std::optional<DesignParams> predicted_design(const SrgParams& p, Diagonal diagonal) {
  if (diagonal == Diagonal::One && p.lambda + 2 == p.mu) return DesignParams{p.v, p.k + 1, p.mu};
  if (diagonal == Diagonal::Zero && p.lambda == p.mu) return DesignParams{p.v, p.k, p.lambda};
  return std::nullopt;
}

// ---------------------------------------------------------------- classification

enum class Kind { NotRegular, Degenerate, Disconnected, Srg, Drg, RegularOnly, Skipped };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::NotRegular: return "not-regular";
    case Kind::Degenerate: return "degenerate";
    case Kind::Disconnected: return "disconnected";
    case Kind::Srg: return "srg";
    case Kind::Drg: return "drg";
    case Kind::RegularOnly: return "regular-only";
    case Kind::Skipped: return "skipped";
  }
  return "?";
}

struct Classification {
  Kind kind = Kind::NotRegular;
  bool regular = false;
  std::size_t degree = 0;
  bool connected = false;
  std::size_t components = 0;
  std::optional<SrgParams> srg;
  std::optional<IntersectionArray> drg;
  std::vector<std::uint64_t> distance_sizes;
  std::string note;
};

struct ClassifyOptions {
  CheckOptions check;
  bool srg_only = false;  // skip the DRG test for non-SRG graphs
};

// regular -> degenerate -> connected -> SRG -> DRG. Every SRG with mu > 0 is
// also run through the DRG check and the two answers must agree.
inline Classification classify(const Graph& g, const ClassifyOptions& opt = {}) {
  Classification c;
  auto reg = check_regular(g);
  c.regular = reg.degree.has_value();
  auto comps = components(g);
  c.components = comps.count;
  c.connected = comps.count == 1;
  if (!c.regular) {
    c.kind = Kind::NotRegular;
    c.note = "vertices " + std::to_string(reg.witness->first + 1) + " and " + std::to_string(reg.witness->second + 1) +
             " have different degrees";
    return c;
  }
  c.degree = *reg.degree;
  if (c.degree == 0 || c.degree + 1 == g.n()) {
    c.kind = Kind::Degenerate;
    c.note = c.degree == 0 ? "degenerate: empty" : "degenerate: complete";
    return c;
  }
  auto srg = check_srg(g, opt.check);
  if (srg.params) {
    c.kind = Kind::Srg;
    c.srg = srg.params;
    if (!c.connected) {
      c.note = "SRG, disconnected";
      return c;
    }
    auto drg = check_drg(g, opt.check);
    if (!drg.array || *drg.array != srg_to_array(*srg.params))
      throw InconsistencyError("SRG " + to_string(*srg.params) + " failed the diameter-2 DRG cross-check");
    c.drg = drg.array;
    c.distance_sizes = drg.distance_sizes;
    return c;
  }
  if (!c.connected) {
    c.kind = Kind::Disconnected;
    c.note = std::to_string(c.components) + " components";
    return c;
  }
  if (opt.srg_only) {
    c.kind = Kind::RegularOnly;
    c.note = srg.reason;
    return c;
  }
  auto drg = check_drg(g, opt.check);
  if (drg.array) {
    if (drg.array->diameter() == 2)
      throw InconsistencyError("diameter-2 DRG " + to_string(*drg.array) + " was rejected as an SRG");
    c.kind = Kind::Drg;
    c.drg = drg.array;
    c.distance_sizes = drg.distance_sizes;
    return c;
  }
  c.kind = Kind::RegularOnly;
  c.note = drg.reason;
  return c;
}

}  // namespace orbitalg

#endif  // ORBITALG_GRAPH_HPP
