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

#ifndef ORBITALG_PERMUTATION_HPP
#define ORBITALG_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitalg/error.hpp"

namespace orbitalg {

using Point = std::uint32_t;

// Largest accepted degree.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 20;

// A bijection of {0, ..., n-1} stored as its image array.
//
// Permutations act on the right: x^(pq) = (x^p)^q, so (p * q)(x) == q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
    return p;
  }

  // Throws InputError unless `images` is a bijection.
  static Permutation from_images(std::vector<Point> images) {
    if (images.size() > kMaxDegree) throw InputError("degree exceeds 2^20");
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size()) throw InputError("image " + std::to_string(x + 1) + " out of range");
      if (seen[x]) throw InputError("image list is not a bijection: " + std::to_string(x + 1) + " repeated");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // For image arrays already known to be bijections.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // Disjoint cycles over 0-based points; points not listed are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Permutation p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point x = cycle[i];
        if (x >= degree) throw InputError("point " + std::to_string(x + 1) + " out of range");
        if (used[x]) throw InputError("point " + std::to_string(x + 1) + " repeated in cycles");
        used[x] = true;
        p.images_[x] = cycle[(i + 1) % cycle.size()];
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::optional<Point> smallest_moved_point() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<Point>(i);
    return std::nullopt;
  }

  Permutation inverse() const {
    Permutation q;
    q.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<Point>(i);
    return q;
  }

  // First this, then `rhs`.
  Permutation operator*(const Permutation& rhs) const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
    return r;
  }
  Permutation& operator*=(const Permutation& rhs) { return *this *= std::span<const Point>(rhs.images_); }
  Permutation& operator*=(std::span<const Point> rhs) {
    for (auto& x : images_) x = rhs[x];
    return *this;
  }

  // Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<Point> c;
      for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  // 1-based disjoint cycle notation; the identity prints as "()".
  std::string to_cycle_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Point x : p.images()) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace orbitalg

#endif  // ORBITALG_PERMUTATION_HPP
