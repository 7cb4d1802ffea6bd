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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "mip/power_maps.hpp"
#include "oracles.hpp"

namespace mip {
namespace {

GroupParams P(Family f, int n, int m, int l) { return GroupParams::of_family(f, n, m, l); }

// a^(2^m) X^(2^m) + b^(2^m) Y^(2^m) + (ab)^(2^(m-1)) Z^(2^(m-1)), truncated.
std::vector<Coeff> phi_closed_form(const JenningsBasis& b, Coeff alpha, Coeff beta) {
  const GroupAlgebra& alg = b.algebra();
  const FieldSpec& f = alg.field();
  const int m = alg.group().params().m;
  AlgebraElement e = f.frobenius_power(alpha, m) * alg.power_of_two(alg.X(), m);
  e += f.frobenius_power(beta, m) * alg.power_of_two(alg.Y(), m);
  e += f.frobenius_power(f.mul(alpha, beta), m - 1) * alg.power_of_two(alg.Z(), m - 1);
  return b.truncate(b.coords(e), 1 << m);
}

std::vector<Coeff> random_coords(const JenningsBasis& b, int min_weight, std::mt19937& rng) {
  std::vector<Coeff> c(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.monomials()[i].weight >= min_weight) {
      c[i] = static_cast<Coeff>(rng() % b.algebra().field().size());
    }
  }
  return c;
}

TEST(PhiTest, ClosedForm) {
  for (int k : {1, 2}) {
    for (auto [n, m, l] : {std::tuple{4, 3, 2}, std::tuple{4, 2, 3}}) {
      for (Family f : kAllFamilies) {
        const GroupAlgebra alg(P(f, n, m, l), FieldSpec(k));
        const JenningsBasis b(alg);
        const PhiPolynomial poly = phi_polynomial(b);
        for (unsigned a = 0; a < alg.field().size(); ++a) {
          for (unsigned c = 0; c < alg.field().size(); ++c) {
            const auto got = phi_eval(b, static_cast<Coeff>(a), static_cast<Coeff>(c));
            ASSERT_EQ(got, phi_closed_form(b, static_cast<Coeff>(a), static_cast<Coeff>(c)))
                << alg.group().params().label() << " k=" << k << " a=" << a << " b=" << c;
            std::map<std::size_t, Coeff> nonzero;
            for (std::size_t i = 0; i < got.size(); ++i) {
              if (got[i] != 0) nonzero[i] = got[i];
            }
            ASSERT_EQ(poly.evaluate(alg.field(), static_cast<Coeff>(a), static_cast<Coeff>(c)),
                      nonzero);
          }
        }
      }
    }
  }
}

TEST(PhiTest, XMapsToPowerOfX) {
  const GroupAlgebra alg(P(Family::kG4, 4, 3, 2), FieldSpec(1));
  const JenningsBasis b(alg);
  EXPECT_EQ(b.from_coords(phi_eval(b, 1, 0)), alg.power_of_two(alg.X(), 3));
}

TEST(PhiTest, KernelSizes) {
  // Columns m > l, m = l, m < l. W has weight 2^n in G6, so the
  // Z^(2^(m-1)) = W term drops out at m = l and the kernel is {a = b}.
  const std::tuple<int, int, int> triples[] = {{4, 3, 2}, {4, 3, 3}, {4, 2, 3}};
  const bool full[6][3] = {{true, true, true},   {true, false, false}, {false, false, true},
                           {false, true, false}, {true, true, true},   {true, true, false}};
  for (int k : {1, 2}) {
    for (int col = 0; col < 3; ++col) {
      const auto [n, m, l] = triples[col];
      for (Family f : kAllFamilies) {
        const GroupAlgebra alg(P(f, n, m, l), FieldSpec(k));
        const JenningsBasis b(alg);
        const std::size_t expected = full[family_index(f) - 1][col] ? alg.field().size() : 1;
        EXPECT_EQ(phi_kernel_size(b), expected) << alg.group().params().label() << " k=" << k;
      }
    }
  }
}

TEST(PhiTest, KernelAgainstProductSpans) {
  // Membership of (aX + bY)^(2^m) in Delta^(1+2^m), with Delta^k from the
  // product-span oracle instead of the weights.
  for (Family f : kAllFamilies) {
    const GroupAlgebra alg(P(f, 4, 3, 3), FieldSpec(1));
    const JenningsBasis b(alg);
    const Gf2Subspace top = oracle::delta_power_space(alg.group(), 9);
    std::size_t count = 0;
    for (Coeff a : {0, 1}) {
      for (Coeff c : {0, 1}) {
        const auto u = a * alg.X() + c * alg.Y();
        if (top.contains(alg.power_of_two(u, 3).plane(0))) ++count;
      }
    }
    EXPECT_EQ(phi_kernel_size(b), count) << family_name(f);
  }
}

TEST(PhiTest, WellDefinedModuloDeltaSquared) {
  std::mt19937 rng(5);
  for (Family f : kAllFamilies) {
    const GroupAlgebra alg(P(f, 3, 2, 2), FieldSpec(1));
    const JenningsBasis b(alg);
    const int deg = 1 << 2;
    for (int trial = 0; trial < 100; ++trial) {
      const auto u = b.from_coords(random_coords(b, 1, rng));
      const auto v = b.from_coords(random_coords(b, 2, rng));
      const auto diff = alg.power_of_two(u + v, 2) + alg.power_of_two(u, 2);
      ASSERT_TRUE(b.in_ideal_power(diff, deg + 1)) << family_name(f);
    }
  }
}

TEST(GammaTest, BasisAndTwoSidedness) {
  for (Family f : kAllFamilies) {
    const GroupAlgebra alg(P(f, 2, 1, 2), FieldSpec(1));
    const JenningsBasis b(alg);
    GammaFiltration gamma(b);
    const Gf2Subspace& g1 = gamma.power(1);
    Gf2Subspace from_monomials(alg.dim());
    for (std::size_t i : gamma.gamma_basis()) from_monomials.insert(b.column(i));
    EXPECT_TRUE(g1.same_span(from_monomials)) << family_name(f);
    for (const auto& row : g1.rows()) {
      const auto u = alg.from_bits(row);
      for (const auto& s : {alg.X(), alg.Y()}) {
        ASSERT_TRUE(alg.in_span(g1, alg.mul(s, u)));
        ASSERT_TRUE(alg.in_span(g1, alg.mul(u, s)));
      }
    }
  }
}

TEST(GammaTest, SquareIsSpanOfProducts) {
  for (Family f : kAllFamilies) {
    const GroupAlgebra alg(P(f, 2, 1, 2), FieldSpec(1));
    const JenningsBasis b(alg);
    GammaFiltration gamma(b);
    std::vector<AlgebraElement> basis;
    for (const auto& row : gamma.power(1).rows()) basis.push_back(alg.from_bits(row));
    Gf2Subspace products(alg.dim());
    for (const auto& u : basis) {
      for (const auto& v : basis) products.insert(alg.mul(u, v).plane(0));
    }
    EXPECT_TRUE(products.same_span(gamma.power(2))) << family_name(f);
    EXPECT_TRUE(gamma.power(1).includes(gamma.power(2)));
  }
}

void check_psi(Family family) {
  const GroupAlgebra alg(P(family, 4, 3, 2), FieldSpec(1));
  const JenningsBasis b(alg);
  GammaFiltration gamma(b);
  const int l = alg.group().params().l;
  const int half = 1 << (l - 1);
  const auto X = alg.X(), Y = alg.Y(), Z = alg.Z(), W = alg.W();
  const auto XhW = alg.mul(alg.power(X, half), W);
  const auto YhW = alg.mul(alg.power(Y, half), W);
  EXPECT_FALSE(gamma.psi_reduce(W).is_zero());
  EXPECT_FALSE(gamma.psi_reduce(XhW).is_zero());
  EXPECT_FALSE(gamma.psi_reduce(YhW).is_zero());
  std::mt19937 rng(13);
  for (int bits = 0; bits < 8; ++bits) {
    const Coeff lam = bits & 1, mu = bits >> 1 & 1, nu = bits >> 2 & 1;
    const auto lead = lam * Z + mu * alg.mul(X, Z) + nu * alg.mul(Y, Z);
    const auto expected = gamma.psi_reduce(lam * W + mu * XhW + nu * YhW);
    EXPECT_EQ(gamma.psi_eval(lead), expected) << family_name(family) << " bits=" << bits;
    for (int trial = 0; trial < 100; ++trial) {
      const auto T = b.from_coords(random_coords(b, 2, rng));
      ASSERT_EQ(gamma.psi_eval(lead + alg.mul(T, Z)), expected)
          << family_name(family) << " bits=" << bits << " trial=" << trial;
    }
  }
  EXPECT_THROW(gamma.psi_eval(X), std::invalid_argument);
}

TEST(GammaTest, PsiOnG5) { check_psi(Family::kG5); }
TEST(GammaTest, PsiOnG3) { check_psi(Family::kG3); }

TEST(AgemoCenterTest, Cases) {
  struct Case {
    Family f;
    int n, m, l, r;
    std::size_t group_side;
  };
  for (const Case& c : {Case{Family::kG1, 2, 2, 2, 2, 1}, Case{Family::kG5, 3, 2, 2, 2, 2},
                        Case{Family::kG5, 3, 2, 2, 3, 1}, Case{Family::kG3, 3, 2, 2, 2, 0}}) {
    const GroupAlgebra alg(P(c.f, c.n, c.m, c.l), FieldSpec(1));
    const auto res = agemo_center_equality(alg, c.r);
    EXPECT_TRUE(res.equal) << alg.group().params().label() << " r=" << c.r;
    if (c.group_side != 0) {
      EXPECT_EQ(res.group_side.rank(), c.group_side);
    }
  }
}

TEST(AgemoCenterTest, G5HasW) {
  const GroupAlgebra alg(P(Family::kG5, 3, 2, 2), FieldSpec(1));
  const auto res = agemo_center_equality(alg, 2);
  EXPECT_TRUE(res.group_side.contains(alg.embed(alg.group().w()).plane(0)));
  EXPECT_EQ(power(alg.group(), alg.group().x(), 8), alg.group().w());
}

TEST(AgemoCenterTest, NoncentralClassSumsVanish) {
  const GroupAlgebra alg(P(Family::kG6, 3, 2, 2), FieldSpec(1));
  for (const auto& cls : center_decomposition(alg).noncentral_classes) {
    EXPECT_TRUE(alg.power_of_two(alg.class_sum(cls), 2).is_zero());
  }
}

TEST(AgemoCenterTest, RefusesSmallR) {
  const GroupAlgebra alg(P(Family::kG1, 2, 2, 2), FieldSpec(1));
  EXPECT_THROW(agemo_center_equality(alg, 1), std::invalid_argument);
}

}  // namespace
}  // namespace mip
