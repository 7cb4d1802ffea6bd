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

// The power maps phi (2^m-th power on Delta/Delta^2) and psi (2^(l-1)-th
// power on Gamma/Gamma^2), the Gamma filtration, and the agemo of the center
// of F G.

#ifndef MIP_POWER_MAPS_HPP_
#define MIP_POWER_MAPS_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mip/algebra.hpp"
#include "mip/jennings.hpp"
#include "mip/subgroups.hpp"

namespace mip {

/// Jennings coordinates of (aX + bY)^(2^m), truncated to weights <= 2^m.
/// Computed by true powering.
inline std::vector<Coeff> phi_eval(const JenningsBasis& basis, Coeff alpha, Coeff beta) {
  const GroupAlgebra& alg = basis.algebra();
  const int m = alg.group().params().m;
  const AlgebraElement u = alg.add(alg.scale(alpha, alg.X()), alg.scale(beta, alg.Y()));
  const AlgebraElement p = alg.power_of_two(u, m);
  auto c = basis.truncate(basis.coords(p), 1 << m);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.monomials()[i].weight < (1 << m) && c[i] != 0) {
      throw std::logic_error("2^m-th power left the expected ideal power");
    }
  }
  return c;
}

/// Coefficient data for phi as a polynomial in (a, b): over GF(2),
/// (aX + bY)^(2^m) = sum_i a^i b^(2^m - i) S_i where S_i is the sum of all
/// words with i letters X and 2^m - i letters Y.
struct PhiPolynomial {
  int degree = 0;  // 2^m
  /// terms[i] = truncated Jennings coordinates of S_i, nonzero entries only.
  std::vector<std::map<std::size_t, Coeff>> terms;

  std::map<std::size_t, Coeff> evaluate(const FieldSpec& f, Coeff a, Coeff b) const {
    std::map<std::size_t, Coeff> out;
    for (int i = 0; i <= degree; ++i) {
      if (terms[i].empty()) continue;
      const Coeff w = f.mul(f.pow(a, static_cast<std::uint64_t>(i)),
                            f.pow(b, static_cast<std::uint64_t>(degree - i)));
      if (w == 0) continue;
      for (const auto& [idx, c] : terms[i]) out[idx] ^= f.mul(w, c);
    }
    for (auto it = out.begin(); it != out.end();) {
      it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
  }
};

inline PhiPolynomial phi_polynomial(const JenningsBasis& basis) {
  const GroupAlgebra& alg = basis.algebra();
  const int deg = 1 << alg.group().params().m;
  const AlgebraElement X = alg.X(), Y = alg.Y();
  // words[i]: sum of words of the current length with i letters X.
  std::vector<AlgebraElement> words{alg.one()};
  for (int len = 1; len <= deg; ++len) {
    std::vector<AlgebraElement> next;
    for (int i = 0; i <= len; ++i) {
      AlgebraElement e = alg.zero();
      if (i >= 1) e = alg.add(e, alg.mul(words[i - 1], X));
      if (i < len) e = alg.add(e, alg.mul(words[i], Y));
      next.push_back(std::move(e));
    }
    words = std::move(next);
  }
  PhiPolynomial poly;
  poly.degree = deg;
  for (int i = 0; i <= deg; ++i) {
    const auto c = basis.truncate(basis.coords(words[i]), deg);
    std::map<std::size_t, Coeff> t;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) t[k] = c[k];
    }
    poly.terms.push_back(std::move(t));
  }
  return poly;
}

/// |{(a, b) in F^2 : phi(aX + bY + Delta^2) = 0}|.
inline std::size_t phi_kernel_size(const JenningsBasis& basis) {
  const FieldSpec& f = basis.algebra().field();
  const PhiPolynomial poly = phi_polynomial(basis);
  std::size_t count = 0;
  for (unsigned a = 0; a < f.size(); ++a) {
    for (unsigned b = 0; b < f.size(); ++b) {
      if (poly.evaluate(f, static_cast<Coeff>(a), static_cast<Coeff>(b)).empty()) ++count;
    }
  }
  return count;
}

/// Gamma = Z F G, its powers, and the quotient used by psi.
class GammaFiltration {
 public:
  explicit GammaFiltration(const JenningsBasis& basis) : basis_(&basis) {
    const GroupAlgebra& alg = basis.algebra();
    BitVector zv = alg.Z().plane(0);
    powers_.push_back(Gf2Subspace(alg.dim()));  // unused slot 0
    powers_.push_back(alg.right_ideal_closure({zv}));
  }

  const JenningsBasis& basis() const { return *basis_; }

  /// Monomial indices with 2t + qu >= 1.
  std::vector<std::size_t> gamma_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_->size(); ++i) {
      const auto& mo = basis_->monomials()[i];
      if (mo.t > 0 || mo.u > 0) out.push_back(i);
    }
    return out;
  }

  /// Gamma^j as the right ideal generated by Gamma^(j-1) Z.
  const Gf2Subspace& power(int j) {
    if (j < 1) throw std::invalid_argument("Gamma power index must be >= 1");
    const GroupAlgebra& alg = basis_->algebra();
    while (static_cast<int>(powers_.size()) <= j) {
      std::vector<BitVector> seeds;
      const Elem z = alg.group().z();
      for (const BitVector& b : powers_.back().rows()) {
        // b Z = b z + b.
        BitVector v = alg.right_translate(b, z);
        v ^= b;
        seeds.push_back(std::move(v));
      }
      powers_.push_back(alg.right_ideal_closure(seeds));
    }
    return powers_[j];
  }

  /// Gamma^(1 + 2^(l-1)) + Delta^d.
  const Gf2Subspace& psi_kernel_space() {
    if (!psi_space_) {
      const int half = 1 << (basis_->algebra().group().params().l - 1);
      psi_space_ = Gf2Subspace::sum(power(1 + half), basis_->delta_power(basis_->d()));
    }
    return *psi_space_;
  }

  /// Normal form of u^(2^(l-1)) modulo Gamma^(1 + 2^(l-1)) + Delta^d.
  AlgebraElement psi_eval(const AlgebraElement& u) {
    const GroupAlgebra& alg = basis_->algebra();
    if (!alg.in_span(power(1), u)) throw std::invalid_argument("psi needs an element of Gamma");
    const int l = alg.group().params().l;
    return alg.reduce(psi_kernel_space(), alg.power_of_two(u, l - 1));
  }

  AlgebraElement psi_reduce(const AlgebraElement& u) {
    return basis_->algebra().reduce(psi_kernel_space(), u);
  }

 private:
  const JenningsBasis* basis_;
  std::vector<Gf2Subspace> powers_;
  std::optional<Gf2Subspace> psi_space_;
};

/// Both sides of F(agemo_r(Z(G))) = agemo_r(Z(F G)).
struct AgemoCenterResult {
  bool equal = false;
  Gf2Subspace group_side;    // span of agemo_r(Z(G))
  Gf2Subspace algebra_side;  // subalgebra generated by 2^r-th powers of Z(FG)
};

/// Refuses r < l. Class sums are 0/1 vectors and so are their powers, so
/// both sides are spans of 0/1 vectors and GF(2) arithmetic suffices.
inline AgemoCenterResult agemo_center_equality(const GroupAlgebra& alg, int r) {
  const Group& g = alg.group();
  if (r < g.params().l) {
    throw std::invalid_argument("agemo of the center compared only for r >= l");
  }
  const GroupAlgebra bin(g.params(), FieldSpec(1));
  AgemoCenterResult res{false, Gf2Subspace(alg.dim()), Gf2Subspace(alg.dim())};
  const auto zg = center(g);
  for (Elem e : agemo(g, zg, r).elements) {
    BitVector v(alg.dim());
    v.set(e);
    res.group_side.insert(v);
  }
  std::vector<AlgebraElement> gens{bin.one()};
  for (const auto& cls : conjugacy_classes(g)) {
    AlgebraElement s = bin.power_of_two(bin.class_sum(cls), r);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  // Subalgebra closure: multiply basis vectors pairwise until stable.
  std::vector<AlgebraElement> basis;
  for (auto& e : gens) {
    if (res.algebra_side.insert(e.plane(0))) basis.push_back(e);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const auto& prod : {bin.mul(basis[i], basis[j]), bin.mul(basis[j], basis[i])}) {
        if (res.algebra_side.insert(prod.plane(0))) basis.push_back(prod);
      }
    }
  }
  res.equal = res.group_side.same_span(res.algebra_side);
  return res;
}

}  // namespace mip

#endif  // MIP_POWER_MAPS_HPP_
