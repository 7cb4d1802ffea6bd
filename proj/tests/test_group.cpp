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

#include <random>
#include <vector>

#include "mip/group.hpp"

namespace mip {
namespace {

// Step-by-step collector: multiplies a normal form on the right by one
// generator at a time using yx -> xyz, zx -> xz^-1, zy -> yz^-1 and the power
// relations, then multiplies by h letter by letter.
class Collector {
 public:
  explicit Collector(const GroupParams& p) : p_(p) {}

  GroupElement times_x(GroupElement g) const {
    // x^a y^b z^c x = x^(a+1) (y^b)^x z^-c and (y^b)^x = y^b z^(b mod 2).
    long c = static_cast<long>(g.b % 2) - static_cast<long>(g.c);
    return fold(g.a + 1, g.b, c);
  }
  GroupElement times_y(GroupElement g) const {
    return fold(g.a, g.b + 1, -static_cast<long>(g.c));
  }
  GroupElement times_z(GroupElement g) const {
    return fold(g.a, g.b, static_cast<long>(g.c) + 1);
  }
  GroupElement product(GroupElement g, GroupElement h) const {
    for (std::uint32_t i = 0; i < h.a; ++i) g = times_x(g);
    for (std::uint32_t i = 0; i < h.b; ++i) g = times_y(g);
    for (std::uint32_t i = 0; i < h.c; ++i) g = times_z(g);
    return g;
  }

 private:
  GroupElement fold(std::uint32_t a, std::uint32_t b, long c) const {
    const long big_l = 1L << p_.l;
    const long half = big_l / 2;
    if (b == (1u << p_.m)) {
      // y^(2^m) = x^(s 2^m) z^(t 2^(l-1)), central.
      b = 0;
      a += static_cast<std::uint32_t>(p_.theta.s) << p_.m;
      c += p_.theta.t * half;
    }
    while (a >= (1u << p_.n)) {
      a -= 1u << p_.n;
      c += p_.theta.r * half;
    }
    c %= big_l;
    if (c < 0) c += big_l;
    return {a, b, static_cast<std::uint32_t>(c)};
  }
  GroupParams p_;
};

std::vector<GroupParams> small_groups() {
  std::vector<GroupParams> out;
  for (Family f : kAllFamilies) {
    out.push_back(GroupParams::literal_family(f, 1, 1, 2));
    out.push_back(GroupParams::literal_family(f, 2, 1, 2));
    out.push_back(GroupParams::literal_family(f, 2, 2, 2));
    out.push_back(GroupParams::literal_family(f, 1, 1, 3));
    out.push_back(GroupParams::literal_family(f, 2, 1, 1, Mode::kDegenerate));
    out.push_back(GroupParams::literal_family(f, 3, 1, 1, Mode::kDegenerate));
  }
  out.push_back(GroupParams::of_theta({0, 2, 0}, 3, 1, 2));
  out.push_back(GroupParams::of_theta({1, 3, 1}, 3, 1, 2));
  return out;
}

TEST(GroupTest, OrdersAndLabels) {
  EXPECT_EQ(Group(GroupParams::of_family(Family::kG1, 2, 2, 2)).order(), 64u);
  EXPECT_EQ(GroupParams::of_family(Family::kG3, 4, 3, 2).label(), "G3(4,3,2)");
  EXPECT_EQ(family_name(Family::kG6), "G6");
  EXPECT_EQ(parse_family("g4"), Family::kG4);
  EXPECT_EQ(parse_family("5"), Family::kG5);
  EXPECT_THROW(parse_family("G7"), std::invalid_argument);
}

TEST(GroupTest, RejectsNonCanonicalLabelsAndBadRanges) {
  EXPECT_THROW(GroupParams::of_family(Family::kG2, 2, 2, 2), std::invalid_argument);
  EXPECT_THROW(GroupParams::of_family(Family::kG4, 3, 3, 2), std::invalid_argument);
  EXPECT_NO_THROW(GroupParams::of_family(Family::kG6, 2, 2, 2));
  EXPECT_NO_THROW(GroupParams::of_family(Family::kG3, 2, 2, 2));
  EXPECT_THROW(GroupParams::of_family(Family::kG1, 2, 3, 2), std::invalid_argument);
  EXPECT_THROW(GroupParams::of_family(Family::kG1, 2, 1, 1), std::invalid_argument);
  EXPECT_NO_THROW(GroupParams::of_family(Family::kG1, 2, 1, 1, Mode::kDegenerate));
  EXPECT_THROW(GroupParams::of_theta({0, 4, 0}, 4, 2, 2), std::invalid_argument);
  EXPECT_THROW(GroupParams::of_theta({2, 0, 0}, 4, 2, 2), std::invalid_argument);
  EXPECT_THROW(GroupParams::of_family(Family::kG1, 8, 8, 8), std::invalid_argument);
}

TEST(GroupTest, ReduceTheta) {
  auto [f1, p1] = reduce_theta({0, 2, 0}, 4, 2, 2);
  EXPECT_EQ(f1, Family::kG1);
  EXPECT_EQ(p1.theta, (Theta{0, 0, 0}));
  auto [f2, p2] = reduce_theta({1, 0, 1}, 3, 3, 2);
  EXPECT_EQ(f2, Family::kG6);
  EXPECT_EQ(p2.theta, (Theta{1, 1, 0}));
  auto [f3, p3] = reduce_theta({1, 0, 1}, 4, 3, 2);
  EXPECT_EQ(f3, Family::kG5);
  EXPECT_EQ(p3.theta, (Theta{1, 0, 0}));
  EXPECT_EQ(reduce_theta({0, 3, 1}, 4, 2, 2).first, Family::kG4);
  EXPECT_EQ(reduce_theta({1, 1, 1}, 4, 3, 2).first, Family::kG6);
  EXPECT_THROW(reduce_theta({0, 1, 0}, 3, 3, 2), std::invalid_argument);
}

TEST(GroupTest, ClosedFormExamples) {
  const Group g(GroupParams::of_family(Family::kG1, 4, 3, 2));
  EXPECT_EQ(g.multiply({0, 1, 0}, {1, 0, 0}), (GroupElement{1, 1, 1}));
  EXPECT_EQ(g.multiply({0, 0, 1}, {1, 0, 0}), (GroupElement{1, 0, 3}));
  const Group h(GroupParams::of_family(Family::kG2, 4, 3, 2));
  const Elem xy = h.mul(h.x(), h.y());
  EXPECT_EQ(h.element(h.mul(xy, xy)), (GroupElement{2, 2, 3}));
}

TEST(GroupTest, ElementOrders) {
  const Group g1(GroupParams::of_family(Family::kG1, 4, 3, 2));
  const Group g2(GroupParams::of_family(Family::kG2, 4, 3, 2));
  EXPECT_EQ(element_order(g1, g1.mul(g1.x(), g1.y())), 16u);
  EXPECT_EQ(element_order(g2, g2.mul(g2.x(), g2.y())), 8u);
  for (const auto& p : small_groups()) {
    const Group g(p);
    EXPECT_EQ(element_order(g, g.z()), std::uint64_t{1} << p.l) << p.label();
  }
}

TEST(GroupTest, AssociativeExhaustivelyOnSmallGroups) {
  for (const auto& p : small_groups()) {
    const Group g(p);
    if (g.order() > 64) continue;
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        const Elem ab = g.mul(a, b);
        for (Elem c = 0; c < g.order(); ++c) {
          ASSERT_EQ(g.mul(ab, c), g.mul(a, g.mul(b, c))) << p.label();
        }
      }
    }
  }
}

TEST(GroupTest, AssociativeOnRandomTriples) {
  std::mt19937 rng(2026);
  for (Family f : kAllFamilies) {
    for (auto [n, m, l] : {std::array{4, 3, 2}, std::array{5, 4, 3}, std::array{4, 2, 3}}) {
      const Group g(GroupParams::of_family(f, n, m, l));
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
      for (int t = 0; t < 10000; ++t) {
        const Elem a = pick(rng), b = pick(rng), c = pick(rng);
        ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << g.params().label();
      }
    }
  }
}

TEST(GroupTest, ClosedFormAgreesWithCollector) {
  for (const auto& p : small_groups()) {
    const Group g(p);
    if (g.order() > 64) continue;
    const Collector col(p);
    for (Elem a = 0; a < g.order(); ++a) {
      for (Elem b = 0; b < g.order(); ++b) {
        ASSERT_EQ(g.multiply(g.element(a), g.element(b)),
                  col.product(g.element(a), g.element(b)))
            << p.label() << " " << g.element_name(a) << " * " << g.element_name(b);
      }
    }
  }
}

TEST(GroupTest, DefiningRelationsHold) {
  for (const auto& p : small_groups()) {
    const Group g(p);
    const Elem x = g.x(), y = g.y(), z = g.z();
    const Elem x2 = g.mul(x, x), y2 = g.mul(y, y);
    for (Elem s : {x, y}) {
      EXPECT_EQ(g.mul(x2, s), g.mul(s, x2)) << p.label();
      EXPECT_EQ(g.mul(y2, s), g.mul(s, y2)) << p.label();
    }
    EXPECT_EQ(commutator(g, y, x), z);
    EXPECT_EQ(conjugate(g, z, x), g.inverse(z));
    EXPECT_EQ(conjugate(g, z, y), g.inverse(z));
    const Elem w = g.w();
    EXPECT_EQ(power(g, x, std::int64_t{1} << p.n), p.theta.r ? w : g.identity());
    Elem rhs = power(g, x, static_cast<std::int64_t>(p.theta.s) << p.m);
    if (p.theta.t) rhs = g.mul(rhs, w);
    EXPECT_EQ(power(g, y, std::int64_t{1} << p.m), rhs);
  }
}

TEST(GroupTest, InversePowerAndCommutator) {
  const Group g(GroupParams::of_family(Family::kG4, 4, 2, 3));
  std::mt19937 rng(1);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
  for (int t = 0; t < 500; ++t) {
    const Elem a = pick(rng), b = pick(rng);
    EXPECT_EQ(g.mul(a, g.inverse(a)), g.identity());
    EXPECT_EQ(power(g, a, -3), g.inverse(power(g, a, 3)));
    EXPECT_EQ(g.mul(a, commutator(g, a, b)), g.mul(g.inverse(b), g.mul(a, b)));
  }
}

TEST(GroupTest, CentralQuotientValidatedOnConstruction) {
  for (Family f : kAllFamilies) {
    EXPECT_NO_THROW(make_group(GroupParams::of_family(f, 4, 3, 2)));
  }
  EXPECT_NO_THROW(make_group(GroupParams::of_family(Family::kG6, 1, 1, 2)));
}

TEST(GroupTest, ElementNames) {
  const Group g(GroupParams::of_family(Family::kG1, 2, 2, 2));
  EXPECT_EQ(g.element_name(0), "1");
  EXPECT_EQ(g.element_name(g.id({1, 2, 3})), "x y^2 z^3");
}

}  // namespace
}  // namespace mip
