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

// A second group base of F G2: units a, b + a + 1 and their commutator,
// which satisfy the defining relations of G1. Plus the coefficient profile
// of a base modulo Delta^3 and the congruences it has to satisfy.

#ifndef MIP_BASE_ANALYSIS_HPP_
#define MIP_BASE_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mip/algebra.hpp"
#include "mip/jennings.hpp"
#include "mip/linalg.hpp"
#include "mip/power_maps.hpp"

namespace mip {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

/// Three units of some F G playing the roles of x, y, z of a family
/// presentation with parameters `target`.
struct UnitTriple {
  std::shared_ptr<const GroupAlgebra> algebra;
  GroupParams target;
  AlgebraElement x, y, z;
};

struct CrossedBase : UnitTriple {
  std::vector<CheckResult> relation_log;
};

/// x^ = a, y^ = b + a + 1, z^ = y^-1 x^-1 y^ x^ in F G2(n, m, l).
inline CrossedBase crossed_base(int n, int m, int l, const FieldSpec& field) {
  // At n = m the G2 relations are only available as a literal presentation.
  const GroupParams ambient = n == m ? GroupParams::literal_family(Family::kG2, n, m, l)
                                     : GroupParams::of_family(Family::kG2, n, m, l);
  auto alg = std::make_shared<const GroupAlgebra>(ambient, field);
  const Group& g = alg->group();
  CrossedBase base;
  base.algebra = alg;
  base.target = GroupParams::of_family(Family::kG1, n, m, l);
  base.x = alg->embed(g.x());
  base.y = alg->add(alg->add(alg->embed(g.y()), alg->embed(g.x())), alg->one());
  base.z = alg->unit_commutator(base.y, base.x);
  for (const AlgebraElement* u : {&base.x, &base.y, &base.z}) {
    if (!alg->is_unit(*u)) throw std::logic_error("crossed base element is not a unit");
  }
  return base;
}

/// The six defining relations of `target`, evaluated on the triple.
inline std::vector<CheckResult> verify_relations(const UnitTriple& t) {
  const GroupAlgebra& alg = *t.algebra;
  const GroupParams& p = t.target;
  const AlgebraElement xi = alg.unit_inverse(t.x);
  const AlgebraElement yi = alg.unit_inverse(t.y);
  const AlgebraElement zi = alg.unit_inverse(t.z);
  const AlgebraElement zm2 = alg.mul(zi, zi);
  const AlgebraElement w = alg.power_of_two(t.z, p.l - 1);
  const AlgebraElement one = alg.one();

  std::vector<CheckResult> out;
  auto record = [&out](std::string name, bool ok) { out.push_back({std::move(name), ok, ""}); };
  const AlgebraElement xpow = alg.power_of_two(t.x, p.n);
  record("x^(2^n) = z^(r 2^(l-1))", xpow == (p.theta.r ? w : one));
  AlgebraElement rhs = alg.power(t.x, static_cast<std::uint64_t>(p.theta.s) << p.m);
  if (p.theta.t) rhs = alg.mul(rhs, w);
  record("y^(2^m) = x^(s 2^m) z^(t 2^(l-1))", alg.power_of_two(t.y, p.m) == rhs);
  record("z^(2^l) = 1", alg.power_of_two(t.z, p.l) == one);
  record("[y, x] = z", alg.mul(alg.mul(yi, xi), alg.mul(t.y, t.x)) == t.z);
  record("[z, x] = z^-2", alg.mul(alg.mul(zi, xi), alg.mul(t.z, t.x)) == zm2);
  record("[z, y] = z^-2", alg.mul(alg.mul(zi, yi), alg.mul(t.z, t.y)) == zm2);
  return out;
}

inline std::vector<CheckResult>& verify_relations(CrossedBase& base) {
  base.relation_log = verify_relations(static_cast<const UnitTriple&>(base));
  return base.relation_log;
}

/// Rank of the linear map F[target] -> F G sending the normal form
/// x^a y^b z^c of the target group to x^^a y^^b z^^c.
inline std::size_t hom_rank(const UnitTriple& t) {
  const GroupAlgebra& alg = *t.algebra;
  const GroupParams& p = t.target;
  if (p.order() != alg.dim()) throw std::invalid_argument("hom_rank: orders differ");
  const std::size_t na = std::size_t{1} << p.n, nb = std::size_t{1} << p.m,
                    nc = std::size_t{1} << p.l;
  std::vector<AlgebraElement> zpow{alg.one()};
  for (std::size_t c = 1; c < nc; ++c) zpow.push_back(alg.mul(zpow.back(), t.z));
  // yz[b * nc + c] = y^^b z^^c
  std::vector<AlgebraElement> yz = zpow;
  yz.reserve(nb * nc);
  for (std::size_t b = 1; b < nb; ++b) {
    for (std::size_t c = 0; c < nc; ++c) yz.push_back(alg.mul(t.y, yz[(b - 1) * nc + c]));
  }
  const bool binary = alg.field().degree() == 1;
  std::vector<BitVector> bit_cols;
  std::vector<std::vector<Coeff>> dense_cols;
  AlgebraElement xa = alg.one();
  for (std::size_t a = 0; a < na; ++a) {
    for (const auto& e : yz) {
      AlgebraElement col = alg.mul(xa, e);
      if (binary) {
        bit_cols.push_back(col.plane(0));
      } else {
        dense_cols.push_back(col.coeffs());
      }
    }
    xa = alg.mul(xa, t.x);
  }
  return binary ? gf2_rank(std::move(bit_cols)) : field_rank(alg.field(), std::move(dense_cols));
}

/// Hom rank after a passing relation check; throws otherwise.
inline std::size_t hom_rank(const CrossedBase& base) {
  if (!all_passed(base.relation_log)) {
    throw std::logic_error("hom_rank: relations have not been verified");
  }
  return hom_rank(static_cast<const UnitTriple&>(base));
}

/// A = aX + bY + cXY + dZ + eX^2 + fY^2 + U with U in Delta^3.
struct ElementProfile {
  Coeff alpha = 0, beta = 0, gamma = 0, delta = 0, xi = 0, eta = 0;
  AlgebraElement residual;
  bool residual_in_delta3 = false;
};

struct BaseProfile {
  ElementProfile a, b;
  Coeff lambda = 0, mu = 0, nu = 0;
};

inline ElementProfile element_profile(const AlgebraElement& u, const JenningsBasis& basis) {
  const GroupAlgebra& alg = basis.algebra();
  const GroupParams& p = alg.group().params();
  if (p.m < 2) throw std::invalid_argument("profile needs n >= m >= 2");
  if (alg.augmentation(u) != 0) throw std::invalid_argument("profile needs an element of Delta");
  const auto c = basis.coords(u);
  ElementProfile pr;
  pr.alpha = c[basis.index_of(1, 0, 0, 0)];
  pr.beta = c[basis.index_of(0, 1, 0, 0)];
  pr.gamma = c[basis.index_of(1, 1, 0, 0)];
  pr.delta = c[basis.index_of(0, 0, 1, 0)];
  pr.xi = c[basis.index_of(2, 0, 0, 0)];
  pr.eta = c[basis.index_of(0, 2, 0, 0)];
  const AlgebraElement X = alg.X(), Y = alg.Y();
  AlgebraElement lead = alg.scale(pr.alpha, X);
  lead += alg.scale(pr.beta, Y);
  lead += alg.scale(pr.gamma, alg.mul(X, Y));
  lead += alg.scale(pr.delta, alg.Z());
  lead += alg.scale(pr.xi, alg.mul(X, X));
  lead += alg.scale(pr.eta, alg.mul(Y, Y));
  pr.residual = alg.add(u, lead);
  pr.residual_in_delta3 = basis.in_ideal_power(pr.residual, 3);
  return pr;
}

inline BaseProfile base_profile(const AlgebraElement& a, const AlgebraElement& b,
                                const JenningsBasis& basis) {
  const FieldSpec& f = basis.algebra().field();
  BaseProfile p;
  p.a = element_profile(a, basis);
  p.b = element_profile(b, basis);
  p.lambda = f.mul(p.a.alpha, p.b.beta) ^ f.mul(p.b.alpha, p.a.beta);
  p.mu = f.mul(p.lambda, 1 ^ p.a.alpha ^ p.b.alpha);
  p.nu = f.mul(p.lambda, 1 ^ p.a.beta ^ p.b.beta);
  return p;
}

/// lambda Z + mu XZ + nu YZ.
inline AlgebraElement c_congruence_target(const GroupAlgebra& alg, const BaseProfile& p) {
  const AlgebraElement Z = alg.Z();
  AlgebraElement t = alg.scale(p.lambda, Z);
  t += alg.scale(p.mu, alg.mul(alg.X(), Z));
  t += alg.scale(p.nu, alg.mul(alg.Y(), Z));
  return t;
}

/// Checks on a concrete base (A = x^ + 1, B = y^ + 1, C = z^ + 1) of F G
/// with n >= m >= 2:
///   gamma_A = gamma_B = 0;
///   C = lambda Z + mu XZ + nu YZ mod Delta^4;
///   A^(2^n) = a_A^(2^n) X^(2^n) + b_A^(2^n) Y^(2^n) mod Z(FG) cap [FG, FG],
///   and the same for B;
///   phi(A + Delta^2), phi(B + Delta^2) match the 2^m-th powers of the base
///   elements and the x-coefficients of A and B agree.
inline std::vector<CheckResult> base_lemma_checks(const UnitTriple& t, const JenningsBasis& basis) {
  const GroupAlgebra& alg = *t.algebra;
  if (&basis.algebra() != &alg) throw std::invalid_argument("basis of another algebra");
  const FieldSpec& f = alg.field();
  const GroupParams& p = alg.group().params();
  const AlgebraElement A = alg.add(t.x, alg.one());
  const AlgebraElement B = alg.add(t.y, alg.one());
  const AlgebraElement C = alg.add(t.z, alg.one());
  const BaseProfile prof = base_profile(A, B, basis);
  std::vector<CheckResult> out;

  out.push_back({"gamma_A = gamma_B = 0", prof.a.gamma == 0 && prof.b.gamma == 0,
                 "gamma_A=" + std::to_string(prof.a.gamma) +
                     " gamma_B=" + std::to_string(prof.b.gamma)});
  out.push_back({"residuals in Delta^3",
                 prof.a.residual_in_delta3 && prof.b.residual_in_delta3, ""});
  out.push_back({"C = lambda Z + mu XZ + nu YZ mod Delta^4",
                 basis.in_ideal_power(alg.add(C, c_congruence_target(alg, prof)), 4),
                 "lambda=" + std::to_string(prof.lambda) + " mu=" + std::to_string(prof.mu) +
                     " nu=" + std::to_string(prof.nu)});

  const CenterDecomposition cd = center_decomposition(alg);
  const AlgebraElement Xn = alg.power_of_two(alg.X(), p.n);
  const AlgebraElement Yn = alg.power_of_two(alg.Y(), p.n);
  auto a2n_check = [&](const AlgebraElement& u, const ElementProfile& pr) {
    AlgebraElement target = alg.scale(f.frobenius_power(pr.alpha, p.n), Xn);
    target += alg.scale(f.frobenius_power(pr.beta, p.n), Yn);
    return alg.in_span(cd.commutator_part_span, alg.add(alg.power_of_two(u, p.n), target));
  };
  out.push_back({"A^(2^n) congruence mod Z(FG) cap [FG,FG]", a2n_check(A, prof.a), ""});
  out.push_back({"B^(2^n) congruence mod Z(FG) cap [FG,FG]", a2n_check(B, prof.b), ""});

  const int deg = 1 << p.m;
  auto trunc_pow = [&](const AlgebraElement& u) {
    return basis.truncate(basis.coords(alg.power_of_two(u, p.m)), deg);
  };
  out.push_back({"phi(A + Delta^2) = x^^(2^m) + 1 mod Delta^(1+2^m)",
                 phi_eval(basis, prof.a.alpha, prof.a.beta) ==
                     trunc_pow(A),
                 ""});
  out.push_back({"phi(B + Delta^2) = y^^(2^m) + 1 mod Delta^(1+2^m)",
                 phi_eval(basis, prof.b.alpha, prof.b.beta) == trunc_pow(B), ""});
  out.push_back({"alpha_A = alpha_B", prof.a.alpha == prof.b.alpha,
                 "alpha_A=" + std::to_string(prof.a.alpha) +
                     " alpha_B=" + std::to_string(prof.b.alpha)});
  return out;
}

struct PerturbationReport {
  int trials = 0;
  int passed = 0;
};

/// Replaces A, B by A + u, B + v with random u, v in Delta^3 and re-checks
/// the congruence for C = 1 + [b', a'] with the perturbed profile.
inline PerturbationReport perturbation_checks(const UnitTriple& t, const JenningsBasis& basis,
                                              int trials, std::uint64_t seed = 1) {
  const GroupAlgebra& alg = *t.algebra;
  const FieldSpec& f = alg.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> coeff(0, f.size() - 1);
  std::bernoulli_distribution sparse(0.05);
  std::vector<std::size_t> deep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.monomials()[i].weight >= 3) deep.push_back(i);
  }
  auto random_deep = [&]() {
    std::vector<Coeff> c(basis.size(), 0);
    for (std::size_t i : deep) {
      if (sparse(rng)) c[i] = static_cast<Coeff>(coeff(rng));
    }
    // Always touch the lowest admissible weight so the perturbation matters.
    c[deep.front()] = static_cast<Coeff>(1 + coeff(rng) % (f.size() - 1));
    return basis.from_coords(c);
  };
  const AlgebraElement A = alg.add(t.x, alg.one());
  const AlgebraElement B = alg.add(t.y, alg.one());
  const BaseProfile base = base_profile(A, B, basis);
  PerturbationReport rep;
  for (int i = 0; i < trials; ++i) {
    const AlgebraElement A2 = alg.add(A, random_deep());
    const AlgebraElement B2 = alg.add(B, random_deep());
    const AlgebraElement a2 = alg.add(A2, alg.one());
    const AlgebraElement b2 = alg.add(B2, alg.one());
    const AlgebraElement C2 = alg.add(alg.unit_commutator(b2, a2), alg.one());
    const BaseProfile prof = base_profile(A2, B2, basis);
    const bool same = prof.lambda == base.lambda && prof.mu == base.mu && prof.nu == base.nu;
    const bool ok = basis.in_ideal_power(alg.add(C2, c_congruence_target(alg, prof)), 4);
    ++rep.trials;
    if (same && ok) ++rep.passed;
  }
  return rep;
}

}  // namespace mip

#endif  // MIP_BASE_ANALYSIS_HPP_
