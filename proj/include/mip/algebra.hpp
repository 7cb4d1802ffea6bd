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

// The group algebra F G over F = GF(2^k) for one of the groups G_theta.
// Elements are dense coefficient vectors indexed by normal-form ids.

#ifndef MIP_ALGEBRA_HPP_
#define MIP_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mip/field.hpp"
#include "mip/group.hpp"
#include "mip/linalg.hpp"
#include "mip/subgroups.hpp"

namespace mip {

class GroupAlgebra;

class AlgebraElement {
 public:
  AlgebraElement() = default;

  const GroupAlgebra* algebra() const { return algebra_; }
  std::size_t size() const { return coeffs_.size(); }
  Coeff operator[](std::size_t g) const { return coeffs_[g]; }
  Coeff& operator[](std::size_t g) { return coeffs_[g]; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (Coeff c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  std::vector<Elem> support() const {
    std::vector<Elem> out;
    for (std::size_t g = 0; g < coeffs_.size(); ++g) {
      if (coeffs_[g] != 0) out.push_back(static_cast<Elem>(g));
    }
    return out;
  }

  /// Bit-plane b of the coefficients, as a GF(2) vector.
  BitVector plane(int b) const {
    BitVector v(coeffs_.size());
    for (std::size_t g = 0; g < coeffs_.size(); ++g) {
      if (coeffs_[g] >> b & 1u) v.set(g);
    }
    return v;
  }

  bool operator==(const AlgebraElement& other) const {
    return algebra_ == other.algebra_ && coeffs_ == other.coeffs_;
  }

  AlgebraElement& operator+=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Coeff s, const AlgebraElement& a);

 private:
  friend class GroupAlgebra;
  AlgebraElement(const GroupAlgebra* algebra, std::size_t n) : algebra_(algebra), coeffs_(n, 0) {}

  const GroupAlgebra* algebra_ = nullptr;
  std::vector<Coeff> coeffs_;
};

/// Owns the group and field. Elements keep a pointer to their algebra, so an
/// algebra must outlive its elements and is neither copied nor moved.
class GroupAlgebra {
 public:
  GroupAlgebra(const GroupParams& params, FieldSpec field)
      : group_(params), field_(std::move(field)) {
    decoded_.reserve(group_.order());
    for (Elem g = 0; g < group_.order(); ++g) decoded_.push_back(group_.element(g));
  }
  GroupAlgebra(const GroupAlgebra&) = delete;
  GroupAlgebra& operator=(const GroupAlgebra&) = delete;

  const Group& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return group_.order(); }

  AlgebraElement zero() const { return AlgebraElement(this, dim()); }
  AlgebraElement scalar(Coeff c) const {
    AlgebraElement e = zero();
    e[group_.identity()] = c;
    return e;
  }
  AlgebraElement one() const { return scalar(1); }
  AlgebraElement embed(Elem g) const {
    AlgebraElement e = zero();
    e[g] = 1;
    return e;
  }
  /// g + 1, the augmentation-ideal generator attached to g.
  AlgebraElement shifted(Elem g) const { return embed(g) + one(); }
  AlgebraElement X() const { return shifted(group_.x()); }
  AlgebraElement Y() const { return shifted(group_.y()); }
  AlgebraElement Z() const { return shifted(group_.z()); }
  AlgebraElement W() const { return shifted(group_.w()); }

  /// Element with the given GF(2) bit pattern as coefficients.
  AlgebraElement from_bits(const BitVector& bits) const {
    check_dim(bits.size());
    AlgebraElement e = zero();
    for (std::size_t g = 0; g < dim(); ++g) e[g] = bits.get(g) ? 1 : 0;
    return e;
  }

  AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const {
    check(u);
    check(v);
    AlgebraElement out = u;
    for (std::size_t g = 0; g < dim(); ++g) out.coeffs_[g] ^= v.coeffs_[g];
    return out;
  }

  AlgebraElement scale(Coeff s, const AlgebraElement& u) const {
    check(u);
    AlgebraElement out = zero();
    for (std::size_t g = 0; g < dim(); ++g) out.coeffs_[g] = field_.mul(s, u.coeffs_[g]);
    return out;
  }

  /// Convolution over the group product.
  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const {
    check(u);
    check(v);
    const auto su = u.support();
    const auto sv = v.support();
    AlgebraElement out = zero();
    const bool binary = field_.degree() == 1;
    for (Elem g : su) {
      const GroupElement dg = decoded_[g];
      const Coeff cg = u.coeffs_[g];
      for (Elem h : sv) {
        const Elem gh = group_.id(group_.multiply(dg, decoded_[h]));
        out.coeffs_[gh] ^= binary ? 1 : field_.mul(cg, v.coeffs_[h]);
      }
    }
    return out;
  }

  /// u * g for a group element g: a coordinate permutation.
  AlgebraElement mul_right(const AlgebraElement& u, Elem g) const {
    check(u);
    AlgebraElement out = zero();
    const GroupElement dg = decoded_[g];
    for (std::size_t h = 0; h < dim(); ++h) {
      if (u.coeffs_[h]) out.coeffs_[group_.id(group_.multiply(decoded_[h], dg))] = u.coeffs_[h];
    }
    return out;
  }

  /// g * u for a group element g.
  AlgebraElement mul_left(Elem g, const AlgebraElement& u) const {
    check(u);
    AlgebraElement out = zero();
    const GroupElement dg = decoded_[g];
    for (std::size_t h = 0; h < dim(); ++h) {
      if (u.coeffs_[h]) out.coeffs_[group_.id(group_.multiply(dg, decoded_[h]))] = u.coeffs_[h];
    }
    return out;
  }

  AlgebraElement power(AlgebraElement u, std::uint64_t k) const {
    check(u);
    AlgebraElement result = one();
    while (k != 0) {
      if (k & 1u) result = mul(result, u);
      k >>= 1;
      if (k != 0) u = mul(u, u);
    }
    return result;
  }

  /// u^(2^e) by e squarings.
  AlgebraElement power_of_two(AlgebraElement u, int e) const {
    for (int i = 0; i < e; ++i) u = mul(u, u);
    return u;
  }

  /// uv + vu.
  AlgebraElement lie_commutator(const AlgebraElement& u, const AlgebraElement& v) const {
    return add(mul(u, v), mul(v, u));
  }

  Coeff augmentation(const AlgebraElement& u) const {
    check(u);
    Coeff s = 0;
    for (Coeff c : u.coeffs_) s ^= c;
    return s;
  }

  bool is_unit(const AlgebraElement& u) const { return augmentation(u) != 0; }

  /// Writes u = a(1 + R) with R in the augmentation ideal; R is nilpotent so
  /// (1 + R)^-1 = 1 + R + R^2 + ... = (1 + R)(1 + R^2)(1 + R^4)...
  AlgebraElement unit_inverse(const AlgebraElement& u) const {
    const Coeff a = augmentation(u);
    if (a == 0) throw std::domain_error("inverse of a non-unit");
    const Coeff a_inv = field_.inv(a);
    AlgebraElement r = add(scale(a_inv, u), one());
    AlgebraElement inv = one();
    while (!r.is_zero()) {
      inv = mul(inv, add(one(), r));
      r = mul(r, r);
    }
    return scale(a_inv, inv);
  }

  /// Group commutator u^-1 v^-1 u v of two units.
  AlgebraElement unit_commutator(const AlgebraElement& u, const AlgebraElement& v) const {
    return mul(mul(unit_inverse(u), unit_inverse(v)), mul(u, v));
  }

  bool commutes(const AlgebraElement& u, const AlgebraElement& v) const {
    return mul(u, v) == mul(v, u);
  }

  /// Central iff it commutes with both group generators.
  bool is_central(const AlgebraElement& u) const {
    for (Elem s : group_.generators()) {
      if (mul_left(s, u) != mul_right(u, s)) return false;
    }
    return true;
  }

  AlgebraElement class_sum(const std::vector<Elem>& cls) const {
    AlgebraElement e = zero();
    for (Elem g : cls) e[g] ^= 1;
    return e;
  }

  /// Plane-wise membership in an F-span of 0/1 vectors.
  bool in_span(const Gf2Subspace& space, const AlgebraElement& u) const {
    check(u);
    for (int b = 0; b < field_.degree(); ++b) {
      if (!space.contains(u.plane(b))) return false;
    }
    return true;
  }

  /// Plane-wise normal form modulo an F-span of 0/1 vectors.
  AlgebraElement reduce(const Gf2Subspace& space, const AlgebraElement& u) const {
    check(u);
    AlgebraElement out = zero();
    for (int b = 0; b < field_.degree(); ++b) {
      const BitVector p = space.reduce(u.plane(b));
      for (std::size_t g = 0; g < dim(); ++g) {
        if (p.get(g)) out.coeffs_[g] |= static_cast<Coeff>(1u << b);
      }
    }
    return out;
  }

  /// Smallest right ideal containing the given 0/1 vectors: closed under
  /// right multiplication by x and y.
  Gf2Subspace right_ideal_closure(const std::vector<BitVector>& seeds) const {
    Gf2Subspace space(dim());
    std::vector<BitVector> queue;
    for (const auto& s : seeds) {
      if (space.insert(s)) queue.push_back(s);
    }
    const auto gens = group_.generators();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Elem g : gens) {
        BitVector next = right_translate(queue[i], g);
        if (space.insert(next)) queue.push_back(std::move(next));
      }
    }
    return space;
  }

  BitVector right_translate(const BitVector& v, Elem g) const {
    BitVector out(dim());
    const GroupElement dg = decoded_[g];
    for (std::size_t h = 0; h < dim(); ++h) {
      if (v.get(h)) out.set(group_.id(group_.multiply(decoded_[h], dg)));
    }
    return out;
  }

  void check(const AlgebraElement& u) const {
    if (u.algebra_ != this) throw std::invalid_argument("algebra element from another algebra");
  }

 private:
  void check_dim(std::size_t n) const {
    if (n != dim()) throw std::invalid_argument("vector length does not match the algebra");
  }

  Group group_;
  FieldSpec field_;
  std::vector<GroupElement> decoded_;
};

inline AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (algebra_ == nullptr || algebra_ != other.algebra_) {
    throw std::invalid_argument("adding elements of different algebras");
  }
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] ^= other.coeffs_[g];
  return *this;
}

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra_ == nullptr) throw std::invalid_argument("empty algebra element");
  return a.algebra_->mul(a, b);
}

inline AlgebraElement operator*(Coeff s, const AlgebraElement& a) {
  if (a.algebra_ == nullptr) throw std::invalid_argument("empty algebra element");
  return a.algebra_->scale(s, a);
}

/// Z(FG) = F Z(G) (+) (Z(FG) cap [FG, FG]). The first summand is spanned by
/// central group elements, the second by non-central class sums.
struct CenterDecomposition {
  std::vector<Elem> central_elements;
  std::vector<std::vector<Elem>> noncentral_classes;
  Gf2Subspace group_center_span;
  Gf2Subspace commutator_part_span;

  std::size_t class_count() const { return central_elements.size() + noncentral_classes.size(); }
};

inline CenterDecomposition center_decomposition(const GroupAlgebra& alg) {
  const Group& g = alg.group();
  CenterDecomposition d{{}, {}, Gf2Subspace(alg.dim()), Gf2Subspace(alg.dim())};
  for (auto& cls : conjugacy_classes(g)) {
    if (cls.size() == 1) {
      d.central_elements.push_back(cls.front());
      BitVector v(alg.dim());
      v.set(cls.front());
      d.group_center_span.insert(v);
    } else {
      BitVector v(alg.dim());
      for (Elem e : cls) v.set(e);
      d.commutator_part_span.insert(v);
      d.noncentral_classes.push_back(std::move(cls));
    }
  }
  return d;
}

}  // namespace mip

#endif  // MIP_ALGEBRA_HPP_
