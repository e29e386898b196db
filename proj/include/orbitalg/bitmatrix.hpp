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

#ifndef ORBITALG_BITMATRIX_HPP
#define ORBITALG_BITMATRIX_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orbitalg {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// Read-only view of one packed row.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::span<const Word> words) : words_(words) {}

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  std::span<const Word> words() const { return words_; }

  // Calls f(i) for every set bit, ascending.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        f(k * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  std::span<const Word> words_;
};

inline std::size_t and_count(BitRow a, BitRow b) {
  auto wa = a.words();
  auto wb = b.words();
  assert(wa.size() == wb.size());
  std::size_t c = 0;
  for (std::size_t k = 0; k < wa.size(); ++k) c += std::popcount(wa[k] & wb[k]);
  return c;
}

// Dense rows x cols bit matrix, rows stored contiguously and word aligned.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] |= Word{1} << (c % kWordBits);
  }
  void reset(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] &= ~(Word{1} << (c % kWordBits));
  }
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
  }

  BitRow row(std::size_t r) const {
    return BitRow({data_.data() + r * stride_, stride_});
  }
  std::span<Word> row_words(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }

  // this |= other, row by row.
  BitMatrix& operator|=(const BitMatrix& other) {
    assert(rows_ == other.rows_ && cols_ == other.cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] |= other.data_[k];
    return *this;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) row(r).for_each([&](std::size_t c) { t.set(c, r); });
    return t;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

// Fixed-size bitset, used for BFS levels and scratch rows.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  std::size_t size() const { return bits_; }
  BitRow view() const { return BitRow({words_.data(), words_.size()}); }
  std::span<Word> words() { return words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace orbitalg

#endif  // ORBITALG_BITMATRIX_HPP
