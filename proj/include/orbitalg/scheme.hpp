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

#ifndef ORBITALG_SCHEME_HPP
#define ORBITALG_SCHEME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitalg/bitmatrix.hpp"
#include "orbitalg/error.hpp"
#include "orbitalg/parallel.hpp"

namespace orbitalg {

// Largest point count for which a dense color matrix is built by default.
inline constexpr std::size_t kDenseSchemeCap = 5000;

using Color = std::uint16_t;

// A coloring of Omega x Omega by relation ids 0..d (the candidate relations
// R_0..R_d of a coherent configuration). Every relation must be non-empty.
class CoherentConfiguration {
 public:
  CoherentConfiguration(std::size_t n, std::size_t relations, std::vector<Color> colors)
      : n_(n), relations_(relations), colors_(std::move(colors)) {
    if (n == 0) throw InputError("configuration needs at least one point");
    if (colors_.size() != n * n) throw InputError("color matrix has wrong size");
    if (relations == 0 || relations > 0xffff) throw InputError("bad relation count");
    std::vector<bool> used(relations, false);
    for (Color c : colors_) {
      if (c >= relations) throw InputError("color id out of range");
      used[c] = true;
    }
    for (std::size_t r = 0; r < relations; ++r)
      if (!used[r]) throw InputError("relation " + std::to_string(r) + " is empty");
  }

  // Relations given as 0/1 row matrices; they must partition Omega x Omega.
  static CoherentConfiguration from_relation_rows(const std::vector<BitMatrix>& rows) {
    if (rows.empty()) throw InputError("no relations");
    const std::size_t n = rows.front().rows();
    std::vector<Color> colors(n * n, 0);
    std::vector<bool> seen(n * n, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].rows() != n || rows[i].cols() != n) throw InputError("relation matrices differ in size");
      for (std::size_t x = 0; x < n; ++x) {
        rows[i].row(x).for_each([&](std::size_t y) {
          if (seen[x * n + y])
            throw InputError("relations overlap at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
          seen[x * n + y] = true;
          colors[x * n + y] = static_cast<Color>(i);
        });
      }
    }
    for (std::size_t c = 0; c < n * n; ++c)
      if (!seen[c])
        throw InputError("pair (" + std::to_string(c / n + 1) + "," + std::to_string(c % n + 1) +
                         ") is in no relation");
    return CoherentConfiguration(n, rows.size(), std::move(colors));
  }

  std::size_t n() const { return n_; }
  std::size_t relations() const { return relations_; }
  Color color(std::size_t x, std::size_t y) const { return colors_[x * n_ + y]; }

  BitMatrix relation_rows(std::size_t i) const {
    BitMatrix m(n_, n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (colors_[x * n_ + y] == i) m.set(x, y);
    return m;
  }

  // The relation j with R_i^T = R_j, if there is one.
  std::optional<std::size_t> converse(std::size_t i) const {
    std::optional<std::size_t> j;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (color(x, y) != i) continue;
        std::size_t c = color(y, x);
        if (!j) j = c;
        else if (*j != c) return std::nullopt;
      }
    // R_i^T subset of R_j; equality needs equal sizes.
    std::size_t size_i = 0, size_j = 0;
    for (Color c : colors_) {
      size_i += c == i;
      size_j += c == *j;
    }
    if (size_i != size_j) return std::nullopt;
    return j;
  }

 private:
  std::size_t n_;
  std::size_t relations_;
  std::vector<Color> colors_;
};

// p[k][i][j] = #{z : (x,z) in R_i, (z,y) in R_j} for (x,y) in R_k.
class IntersectionTensor {
 public:
  explicit IntersectionTensor(std::size_t relations)
      : r_(relations), p_(relations * relations * relations, 0) {}

  std::size_t relations() const { return r_; }
  std::uint64_t operator()(std::size_t k, std::size_t i, std::size_t j) const { return p_[(k * r_ + i) * r_ + j]; }
  std::uint64_t& at(std::size_t k, std::size_t i, std::size_t j) { return p_[(k * r_ + i) * r_ + j]; }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t r_;
  std::vector<std::uint64_t> p_;
};

// Two pairs of the same color with different counts for (i, j).
struct TensorViolation {
  std::size_t x, y;    // representative pair of color k
  std::size_t x2, y2;  // offending pair
  std::size_t i, j;
  std::uint64_t expected, found;
};

struct IntersectionResult {
  std::optional<IntersectionTensor> tensor;
  std::optional<TensorViolation> violation;
  bool ok() const { return tensor.has_value(); }
};

// Counts intersection numbers at one representative pair per color, then
// checks that every pair of that color gives the same counts.
// Counts p^k_ij at one representative pair per color k, then checks every
// other pair against it. Few relations: bit-row intersections per (i, j).
// Many relations: one walk over z per pair, tallying (color(x,z), color(z,y));
// matching every tallied cell suffices because both sides sum to n.
inline IntersectionResult intersection_numbers(const CoherentConfiguration& cfg, unsigned threads = 1) {
  const std::size_t n = cfg.n();
  const std::size_t r = cfg.relations();
  constexpr std::size_t kMaxTensorCells = std::size_t{1} << 28;
  if (r * r * r > kMaxTensorCells) throw InputError(std::to_string(r) + " relations are too many for a dense tensor");
  const bool walk = r > 8;

  std::vector<BitMatrix> rows, cols;
  if (!walk) {
    rows.resize(r);
    cols.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      rows[i] = cfg.relation_rows(i);
      cols[i] = rows[i].transposed();
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> rep(r, {n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rep[cfg.color(x, y)].first == n) rep[cfg.color(x, y)] = {x, y};

  IntersectionTensor tensor(r);
  for (std::size_t k = 0; k < r; ++k) {
    auto [x, y] = rep[k];
    if (walk) {
      for (std::size_t z = 0; z < n; ++z) ++tensor.at(k, cfg.color(x, z), cfg.color(z, y));
      continue;
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) tensor.at(k, i, j) = and_count(rows[i].row(x), cols[j].row(y));
  }

  auto check_bits = [&](std::size_t x, std::size_t y) -> std::optional<TensorViolation> {
    const std::size_t k = cfg.color(x, y);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        std::uint64_t c = and_count(rows[i].row(x), cols[j].row(y));
        if (c != tensor(k, i, j)) return TensorViolation{rep[k].first, rep[k].second, x, y, i, j, tensor(k, i, j), c};
      }
    return std::nullopt;
  };
  auto check_walk = [&](std::size_t x, std::size_t y, std::vector<std::uint32_t>& tally) -> std::optional<TensorViolation> {
    const std::size_t k = cfg.color(x, y);
    std::optional<TensorViolation> v;
    for (std::size_t z = 0; z < n; ++z) ++tally[cfg.color(x, z) * r + cfg.color(z, y)];
    for (std::size_t z = 0; z < n; ++z) {
      const std::size_t i = cfg.color(x, z), j = cfg.color(z, y);
      auto& c = tally[i * r + j];
      if (c == 0) continue;  // already compared
      if (!v && c != tensor(k, i, j)) v = TensorViolation{rep[k].first, rep[k].second, x, y, i, j, tensor(k, i, j), c};
      c = 0;
    }
    return v;
  };

  IntersectionResult result;
  ordered_scan(
      n, threads,
      [&](std::size_t x) -> std::optional<TensorViolation> {
        std::vector<std::uint32_t> tally(walk ? r * r : 0, 0);
        for (std::size_t y = 0; y < n; ++y)
          if (auto v = walk ? check_walk(x, y, tally) : check_bits(x, y)) return v;
        return std::nullopt;
      },
      [&](std::size_t, std::optional<TensorViolation> v) {
        if (v) result.violation = v;
        return !v;
      });
  if (!result.violation) result.tensor = std::move(tensor);
  return result;
}

struct ConfigurationFlags {
  bool identity_union = false;    // (i) the diagonal is a union of relations
  bool transpose_closed = false;  // (iii)
  bool constant_counts = false;   // (iv)
  bool coherent = false;          // (i)-(iv); (ii) holds by construction
  bool homogeneous = false;       // the diagonal is a single relation
  bool symmetric = false;         // every relation symmetric
  bool association_scheme = false;
};

inline ConfigurationFlags classify_configuration(const CoherentConfiguration& cfg, unsigned threads = 1) {
  const std::size_t n = cfg.n();
  ConfigurationFlags f;
  std::vector<bool> on_diag(cfg.relations(), false), off_diag(cfg.relations(), false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) (x == y ? on_diag : off_diag)[cfg.color(x, y)] = true;
  f.identity_union = true;
  std::size_t diagonal_relations = 0;
  for (std::size_t i = 0; i < cfg.relations(); ++i) {
    if (on_diag[i] && off_diag[i]) f.identity_union = false;
    diagonal_relations += on_diag[i];
  }
  f.transpose_closed = true;
  f.symmetric = true;
  for (std::size_t i = 0; i < cfg.relations(); ++i) {
    auto j = cfg.converse(i);
    if (!j) f.transpose_closed = false;
    if (!j || *j != i) f.symmetric = false;
  }
  f.constant_counts = f.transpose_closed && intersection_numbers(cfg, threads).ok();
  f.coherent = f.identity_union && f.transpose_closed && f.constant_counts;
  f.homogeneous = f.coherent && diagonal_relations == 1;
  f.association_scheme = f.coherent && f.symmetric;
  if (f.association_scheme && !f.homogeneous)
    throw InconsistencyError("symmetric coherent configuration is not homogeneous");
  return f;
}

}  // namespace orbitalg

#endif  // ORBITALG_SCHEME_HPP
