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

// Weighted monomial basis X^r Y^s Z^t W^u of F G with X = x + 1, Y = y + 1,
// Z = z + 1, W = w + 1 and weight r + s + 2t + q u. Monomials of weight >= k
// span the k-th power of the augmentation ideal.

#ifndef MIP_JENNINGS_HPP_
#define MIP_JENNINGS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mip/algebra.hpp"
#include "mip/linalg.hpp"

namespace mip {

struct JenningsMonomial {
  std::uint32_t r = 0, s = 0, t = 0, u = 0;
  int weight = 0;

  auto key() const { return std::tie(weight, r, s, t, u); }
  bool operator==(const JenningsMonomial& o) const {
    return r == o.r && s == o.s && t == o.t && u == o.u;
  }

  std::string name() const {
    std::string out;
    auto term = [&out](const char* sym, std::uint32_t k) {
      if (k == 0) return;
      out += sym;
      if (k != 1) out += "^" + std::to_string(k);
    };
    term("X", r);
    term("Y", s);
    term("Z", t);
    term("W", u);
    return out.empty() ? "1" : out;
  }
};

/// Weight of w: 2^l for G1, G2; 2^max(m,l) for G3, G4; 2^max(n,l) for G5, G6.
inline int jennings_q(const GroupParams& p) {
  const Family f = p.family ? *p.family : reduce_theta(p.theta, p.n, p.m, p.l, p.mode).first;
  switch (f) {
    case Family::kG1:
    case Family::kG2:
      return 1 << p.l;
    case Family::kG3:
    case Family::kG4:
      return 1 << std::max(p.m, p.l);
    case Family::kG5:
    case Family::kG6:
      return 1 << std::max(p.n, p.l);
  }
  throw std::logic_error("bad family");
}

inline constexpr int kInfiniteWeight = std::numeric_limits<int>::max();

class JenningsBasis {
 public:
  explicit JenningsBasis(const GroupAlgebra& alg) : alg_(&alg) {
    const GroupParams& p = alg.group().params();
    if (p.l < 2) throw std::invalid_argument("Jennings basis needs l >= 2");
    q_ = jennings_q(p);
    const std::uint32_t nx = 1u << p.n, ny = 1u << p.m, nz = 1u << (p.l - 1);
    for (std::uint32_t r = 0; r < nx; ++r) {
      for (std::uint32_t s = 0; s < ny; ++s) {
        for (std::uint32_t t = 0; t < nz; ++t) {
          for (std::uint32_t u = 0; u < 2; ++u) {
            monomials_.push_back({r, s, t, u, static_cast<int>(r + s + 2 * t) + q_ * static_cast<int>(u)});
          }
        }
      }
    }
    std::sort(monomials_.begin(), monomials_.end(),
              [](const JenningsMonomial& a, const JenningsMonomial& b) { return a.key() < b.key(); });
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
      const auto& mo = monomials_[i];
      index_[{mo.r, mo.s, mo.t, mo.u}] = i;
    }

    // Expand every monomial by algebra multiplication of cached powers.
    std::vector<AlgebraElement> xp{alg.one()}, yp{alg.one()}, zp{alg.one()};
    const AlgebraElement X = alg.X(), Y = alg.Y(), Z = alg.Z(), W = alg.W();
    for (std::uint32_t i = 1; i < nx; ++i) xp.push_back(alg.mul(xp.back(), X));
    for (std::uint32_t i = 1; i < ny; ++i) yp.push_back(alg.mul(yp.back(), Y));
    for (std::uint32_t i = 1; i < nz; ++i) zp.push_back(alg.mul(zp.back(), Z));
    columns_.reserve(monomials_.size());
    for (const auto& mo : monomials_) {
      AlgebraElement e = alg.mul(alg.mul(xp[mo.r], yp[mo.s]), zp[mo.t]);
      if (mo.u) e = alg.mul(e, W);
      columns_.push_back(e.plane(0));
      for (std::size_t g = 0; g < alg.dim(); ++g) {
        if (e[g] > 1) throw std::logic_error("monomial expansion is not binary");
      }
    }
    // M^-1 as rows over group coordinates: rows_[i] . v = coordinate i.
    std::vector<BitVector> m_rows(alg.dim(), BitVector(monomials_.size()));
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      for (std::size_t g = 0; g < alg.dim(); ++g) {
        if (columns_[i].get(g)) m_rows[g].set(i);
      }
    }
    auto inv = gf2_inverse(m_rows);
    if (!inv) throw std::logic_error("Jennings monomials are not a basis");
    inverse_rows_ = std::move(*inv);
  }

  const GroupAlgebra& algebra() const { return *alg_; }
  int q() const { return q_; }
  /// d = 1 + 2^(l-1) + q.
  int d() const { return 1 + (1 << (alg_->group().params().l - 1)) + q_; }
  const std::vector<JenningsMonomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }

  std::size_t index_of(std::uint32_t r, std::uint32_t s, std::uint32_t t, std::uint32_t u) const {
    auto it = index_.find({r, s, t, u});
    if (it == index_.end()) throw std::out_of_range("no such Jennings monomial");
    return it->second;
  }

  /// Expansion of monomial i in group coordinates (a column of M).
  const BitVector& column(std::size_t i) const { return columns_[i]; }
  AlgebraElement monomial_element(std::size_t i) const { return alg_->from_bits(columns_[i]); }
  /// Row i of M^-1.
  const BitVector& inverse_row(std::size_t i) const { return inverse_rows_[i]; }

  /// Coordinates of u in the monomial basis.
  std::vector<Coeff> coords(const AlgebraElement& u) const {
    alg_->check(u);
    std::vector<Coeff> out(size(), 0);
    for (int b = 0; b < alg_->field().degree(); ++b) {
      const BitVector plane = u.plane(b);
      if (!plane.any()) continue;
      for (std::size_t i = 0; i < size(); ++i) {
        if (inverse_rows_[i].dot(plane)) out[i] |= static_cast<Coeff>(1u << b);
      }
    }
    return out;
  }

  AlgebraElement from_coords(const std::vector<Coeff>& c) const {
    AlgebraElement e = alg_->zero();
    for (std::size_t i = 0; i < size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t g = 0; g < alg_->dim(); ++g) {
        if (columns_[i].get(g)) e[g] ^= c[i];
      }
    }
    return e;
  }

  /// Least weight in the support; kInfiniteWeight for zero.
  int weight(const AlgebraElement& u) const {
    const auto c = coords(u);
    for (std::size_t i = 0; i < size(); ++i) {
      if (c[i] != 0) return monomials_[i].weight;
    }
    return kInfiniteWeight;
  }

  bool in_ideal_power(const AlgebraElement& u, int k) const { return weight(u) >= k; }

  /// Span of the monomials of weight >= k, in group coordinates.
  Gf2Subspace delta_power(int k) const {
    Gf2Subspace space(alg_->dim());
    for (std::size_t i = 0; i < size(); ++i) {
      if (monomials_[i].weight >= k) space.insert(columns_[i]);
    }
    return space;
  }

  /// Number of monomials of each weight, indexed by weight.
  std::vector<std::size_t> layer_sizes() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(monomials_.back().weight) + 1, 0);
    for (const auto& mo : monomials_) ++out[mo.weight];
    return out;
  }

  /// Zero every coordinate of weight above k.
  std::vector<Coeff> truncate(std::vector<Coeff> c, int k) const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (monomials_[i].weight > k) c[i] = 0;
    }
    return c;
  }

 private:
  const GroupAlgebra* alg_;
  int q_ = 0;
  std::vector<JenningsMonomial> monomials_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, std::size_t>
      index_;
  std::vector<BitVector> columns_;
  std::vector<BitVector> inverse_rows_;
};

}  // namespace mip

#endif  // MIP_JENNINGS_HPP_
