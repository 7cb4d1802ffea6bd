// Copyright 2026 The mip Authors
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

// Exact linear algebra: bit-packed GF(2) vectors and subspaces, plus a dense
// GF(2^k) rank routine. Every subspace that the algebra layer needs
// (augmentation powers, Gamma powers, class-sum spans) is spanned by vectors
// with 0/1 coefficients, so GF(2^k) membership reduces to GF(2) membership
// of each bit-plane.

#ifndef MIP_LINALG_HPP_
#define MIP_LINALG_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mip/field.hpp"

namespace mip {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }

  /// Index of the highest set bit, or nullopt for the zero vector.
  std::optional<std::size_t> highest_bit() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) {
        return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
      }
    }
    return std::nullopt;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Parity of the bitwise AND, i.e. the GF(2) dot product.
  bool dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  bool operator==(const BitVector& other) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subspace of GF(2)^n kept in reduced row echelon form. The pivot of each
/// row is its highest set bit, so normal forms keep low coordinates and clear
/// high ones. Normal forms are independent of insertion order.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(std::size_t ambient_dim = 0)
      : ambient_dim_(ambient_dim), pivot_row_(ambient_dim, -1) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVector>& rows() const { return rows_; }

  BitVector reduce(BitVector v) const {
    check_size(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.get(pivots_[r])) v ^= rows_[r];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return !reduce(v).any(); }

  /// Adds v to the span. Returns true if the rank grew.
  bool insert(BitVector v) {
    v = reduce(std::move(v));
    const auto pivot = v.highest_bit();
    if (!pivot) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].get(*pivot)) rows_[r] ^= v;
    }
    pivot_row_[*pivot] = static_cast<int>(rows_.size());
    pivots_.push_back(*pivot);
    rows_.push_back(std::move(v));
    return true;
  }

  bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

  /// True when every vector of `other` lies in this space.
  bool includes(const Gf2Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](const BitVector& v) { return contains(v); });
  }

  bool same_span(const Gf2Subspace& other) const {
    return rank() == other.rank() && includes(other);
  }

  static Gf2Subspace sum(const Gf2Subspace& a, const Gf2Subspace& b) {
    Gf2Subspace out = a;
    for (const BitVector& v : b.rows_) out.insert(v);
    return out;
  }

 private:
  void check_size(const BitVector& v) const {
    if (v.size() != ambient_dim_) {
      throw std::invalid_argument("vector length does not match subspace");
    }
  }

  std::size_t ambient_dim_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> pivot_row_;
};

/// Rank over GF(2) by in-place elimination on a copy of the rows.
inline std::size_t gf2_rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    const std::size_t word = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    const auto pivot_words = rows[rank].words();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      auto w = rows[r].words();
      if (w[word] & mask) {
        for (std::size_t i = word; i < w.size(); ++i) w[i] ^= pivot_words[i];
      }
    }
    ++rank;
  }
  return rank;
}

/// Inverse of a square GF(2) matrix given by rows, or nullopt if singular.
inline std::optional<std::vector<BitVector>> gf2_inverse(std::vector<BitVector> rows) {
  const std::size_t n = rows.size();
  std::vector<BitVector> inv(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
    inv[i].set(i);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !rows[p].get(c)) ++p;
    if (p == n) return std::nullopt;
    std::swap(rows[c], rows[p]);
    std::swap(inv[c], inv[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && rows[r].get(c)) {
        rows[r] ^= rows[c];
        inv[r] ^= inv[c];
      }
    }
  }
  return inv;
}

/// Rank of a dense matrix over GF(2^k); rows of equal length.
inline std::size_t field_rank(const FieldSpec& field, std::vector<std::vector<Coeff>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    const Coeff pivot_inv = field.inv(rows[rank][c]);
    for (std::size_t j = c; j < cols; ++j) rows[rank][j] = field.mul(rows[rank][j], pivot_inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Coeff f = rows[r][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[r][j] ^= field.mul(f, rows[rank][j]);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace mip

#endif  // MIP_LINALG_HPP_
