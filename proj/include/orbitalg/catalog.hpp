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

#ifndef ORBITALG_CATALOG_HPP
#define ORBITALG_CATALOG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbitalg/error.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/permutation.hpp"

namespace orbitalg {

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::string degree;
  std::string description;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"symmetric", {"n"}, "n", "S(n) in its natural action"},
      {"subsets", {"n", "k"}, "C(n,k)", "S(n) on k-subsets, colexicographic labels (Johnson/Kneser graphs)"},
      {"cyclic", {"n"}, "n", "C(n) acting regularly on Z/n"},
      {"dihedral", {"n"}, "n", "D(n) of order 2n on the vertices of an n-gon (n >= 3)"},
      {"grid", {"m"}, "m^2", "S(m) wr S(2) on an m x m grid, cell (r,c) -> r*m+c (rook's graphs)"},
  };
  return entries;
}

namespace detail {

inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMaxDegree) return kMaxDegree + 1;
  }
  return r;
}

inline Permutation cycle_on(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return Permutation::from_images(std::move(img));
}

inline Permutation transposition01(std::size_t n) {
  Permutation p = Permutation::identity(n);
  if (n < 2) return p;
  return Permutation::from_cycles(n, {{0, 1}});
}

inline void require_degree(std::uint64_t degree) {
  if (degree == 0) throw InputError("catalog: degree must be positive");
  if (degree > kMaxDegree) throw InputError("catalog: degree overflow (more than 2^20 points)");
}

}  // namespace detail

inline PermutationGroup symmetric_group(std::size_t n) {
  detail::require_degree(n);
  Metadata meta{{"name", "symmetric_" + std::to_string(n)}};
  if (n == 1) return PermutationGroup(1, {Permutation::identity(1)}, meta);
  return PermutationGroup(n, {detail::transposition01(n), detail::cycle_on(n)}, meta);
}

inline PermutationGroup cyclic_group(std::size_t n) {
  detail::require_degree(n);
  return PermutationGroup(n, {detail::cycle_on(n)}, {{"name", "cyclic_" + std::to_string(n)}});
}

inline PermutationGroup dihedral_group(std::size_t n) {
  if (n < 3) throw InputError("catalog: dihedral needs n >= 3");
  detail::require_degree(n);
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermutationGroup(n, {detail::cycle_on(n), Permutation::from_images(std::move(refl))},
                          {{"name", "dihedral_" + std::to_string(n)}});
}

// All k-subsets of {0..n-1} in colexicographic order.
inline std::vector<std::vector<Point>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Point>(i);
  if (k > n) return out;
  for (;;) {
    out.push_back(s);
    std::size_t i = 0;
    while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n)) ++i;
    if (i == k) break;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = static_cast<Point>(j);
  }
  return out;
}

inline PermutationGroup subsets_group(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k >= n) throw InputError("catalog: subsets needs 1 <= k < n");
  detail::require_degree(detail::binomial_capped(n, k));
  auto subsets = colex_subsets(n, k);
  // Colex rank of a sorted subset: sum of C(s_i, i+1).
  auto rank = [&](std::vector<Point> s) {
    std::sort(s.begin(), s.end());
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += detail::binomial_capped(s[i], i + 1);
    return static_cast<Point>(r);
  };
  auto induced = [&](const Permutation& g) {
    std::vector<Point> img(subsets.size());
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
      std::vector<Point> t(subsets[idx].size());
      for (std::size_t j = 0; j < t.size(); ++j) t[j] = g[subsets[idx][j]];
      img[idx] = rank(std::move(t));
    }
    return Permutation::from_images(std::move(img));
  };
  return PermutationGroup(subsets.size(), {induced(detail::transposition01(n)), induced(detail::cycle_on(n))},
                          {{"name", "subsets_" + std::to_string(n) + "_" + std::to_string(k)}});
}

inline PermutationGroup grid_group(std::size_t m) {
  if (m < 1) throw InputError("catalog: grid needs m >= 1");
  detail::require_degree(std::uint64_t{m} * m);
  const std::size_t n = m * m;
  Metadata meta{{"name", "grid_" + std::to_string(m)}};
  if (m == 1) return PermutationGroup(1, {Permutation::identity(1)}, meta);
  auto on_rows = [&](const Permutation& g) {
    std::vector<Point> img(n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) img[r * m + c] = static_cast<Point>(g[r] * m + c);
    return Permutation::from_images(std::move(img));
  };
  std::vector<Point> swap(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) swap[r * m + c] = static_cast<Point>(c * m + r);
  return PermutationGroup(
      n, {on_rows(detail::transposition01(m)), on_rows(detail::cycle_on(m)), Permutation::from_images(std::move(swap))},
      meta);
}

// Builds a catalog group; throws InputError for unknown names or bad parameters.
inline PermutationGroup catalog(std::string_view name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError("catalog: '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto checked = [](PermutationGroup g) {
    if (!is_transitive(g)) throw InconsistencyError("catalog group " + g.name() + " is not transitive");
    return g;
  };
  if (name == "symmetric") return need(1), checked(symmetric_group(params[0]));
  if (name == "subsets") return need(2), checked(subsets_group(params[0], params[1]));
  if (name == "cyclic") return need(1), checked(cyclic_group(params[0]));
  if (name == "dihedral") return need(1), checked(dihedral_group(params[0]));
  if (name == "grid") return need(1), checked(grid_group(params[0]));
  throw InputError("catalog: unknown group '" + std::string(name) + "'");
}

// "subsets:5,2" -> catalog("subsets", {5, 2}).
inline PermutationGroup catalog_from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view name = spec.substr(0, colon);
  std::vector<std::size_t> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = rest.find(',', start);
      std::string_view tok = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("catalog: bad parameter '" + std::string(tok) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return catalog(name, params);
}

}  // namespace orbitalg

#endif  // ORBITALG_CATALOG_HPP
