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
#include <tuple>
#include <vector>

#include "mip/report.hpp"

namespace mip {
namespace {

using Inv = std::vector<std::uint64_t>;

GroupParams P(Family f, int n, int m, int l) { return GroupParams::of_family(f, n, m, l); }

// Triples with l >= 2 and order at most 2^9.
std::vector<std::tuple<int, int, int>> small_triples() {
  std::vector<std::tuple<int, int, int>> out;
  for (int l = 2; l <= 7; ++l) {
    for (int m = 1; m + m + l <= 9; ++m) {
      for (int n = m; n + m + l <= 9; ++n) out.emplace_back(n, m, l);
    }
  }
  return out;
}

std::vector<Family> labels_at(int n, int m) {
  if (n > m) return {std::begin(kAllFamilies), std::end(kAllFamilies)};
  return {Family::kG1, Family::kG3, Family::kG5, Family::kG6};
}

TEST(FingerprintTest, Examples) {
  const auto g1 = fingerprint(P(Family::kG1, 4, 3, 2));
  EXPECT_EQ(g1.center, (Inv{8, 4, 2}));
  EXPECT_EQ(g1.centralizer_exponent, 16u);
  EXPECT_EQ(g1.kernel_sizes.at(1), 2u);
  EXPECT_EQ(fingerprint(P(Family::kG2, 4, 3, 2)).centralizer_exponent, 8u);
  EXPECT_EQ(fingerprint(P(Family::kG6, 4, 3, 2)).center, (Inv{16, 4}));
  const auto small = fingerprint(P(Family::kG1, 2, 2, 2));
  EXPECT_EQ(small.order, 64u);
  EXPECT_EQ(small.coclass, 3);
}

TEST(FingerprintTest, StructuralInvariants) {
  for (auto [n, m, l] : small_triples()) {
    for (Family f : labels_at(n, m)) {
      const auto r = fingerprint(P(f, n, m, l));
      EXPECT_EQ(r.order, std::uint64_t{1} << (n + m + l));
      EXPECT_EQ(r.coclass, n + m - 1);
      EXPECT_EQ(r.abelianization, (Inv{std::uint64_t{1} << n, std::uint64_t{1} << m}))
          << params_name(r.params);
    }
  }
}

TEST(FingerprintTest, AbelianizationByQuotientOrder) {
  const Group g(P(Family::kG4, 3, 1, 2));
  std::uint64_t product = 1;
  for (auto k : abelianization(g)) product *= k;
  EXPECT_EQ(product * derived_subgroup(g).order(), g.order());
}

TEST(FingerprintTest, QuotientRows) {
  FingerprintOptions opts;
  opts.quotients = true;
  const auto r = fingerprint(P(Family::kG6, 2, 1, 2), opts);
  ASSERT_TRUE(r.quotients.has_value());
  bool found = false;
  for (const auto& row : *r.quotients) found |= row.target == "G2(2,1,1)";
  EXPECT_TRUE(found);
}

TEST(FingerprintTest, IsomorphicGroupsShareFingerprints) {
  // Literal presentations outside the canonical range against their labels.
  for (auto [n, l] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    for (Family f : {Family::kG2, Family::kG4}) {
      const GroupParams lit = GroupParams::literal_family(f, n, n, l);
      const GroupParams canon = P(normalize_label(f, n, n, l), n, n, l);
      ASSERT_TRUE(brute_force_isomorphic(lit, canon));
      EXPECT_TRUE(same_invariants(fingerprint(lit), fingerprint(canon))) << params_name(lit);
    }
  }
  const GroupParams g3 = P(Family::kG3, 2, 2, 2);
  const GroupParams g5 = P(Family::kG5, 2, 2, 2);
  ASSERT_TRUE(brute_force_isomorphic(g3, g5));
  EXPECT_TRUE(same_invariants(fingerprint(g3), fingerprint(g5)));
}

TEST(VerdictTest, Examples) {
  const auto v15 = distinguish_pair(P(Family::kG1, 4, 3, 2), P(Family::kG5, 4, 3, 2));
  EXPECT_EQ(v15.outcome, Outcome::kDistinguished);
  EXPECT_EQ(v15.invariant, "center");

  const auto v12 = distinguish_pair(P(Family::kG1, 4, 3, 2), P(Family::kG2, 4, 3, 2));
  EXPECT_EQ(v12.outcome, Outcome::kIsomorphicAlgebrasVerified);
  std::map<std::string, std::string> ev(v12.evidence.begin(), v12.evidence.end());
  EXPECT_EQ(ev["rank"], "512");
  EXPECT_EQ(ev["groups_isomorphic"], "false");
  EXPECT_EQ(ev["centralizer_exponents"], "16,8");

  const auto v24 = distinguish_pair(P(Family::kG2, 3, 1, 2), P(Family::kG4, 3, 1, 2));
  EXPECT_EQ(v24.outcome, Outcome::kDistinguished);
  EXPECT_EQ(v24.invariant, "kulshammer");

  const auto v34 = distinguish_pair(P(Family::kG3, 4, 3, 2), P(Family::kG4, 4, 3, 2));
  EXPECT_EQ(v34.outcome, Outcome::kCitedDistinct);
  EXPECT_FALSE(v34.citation.empty());

  const auto v35 = distinguish_pair(P(Family::kG3, 2, 2, 2), P(Family::kG5, 2, 2, 2));
  EXPECT_EQ(v35.outcome, Outcome::kUndecided);
  EXPECT_EQ(v35.evidence.front().first, "groups_isomorphic");

  EXPECT_THROW(distinguish_pair(P(Family::kG1, 4, 3, 2), P(Family::kG2, 4, 2, 2)),
               std::invalid_argument);
}

TEST(VerdictTest, SymmetricAndVerifiedExactlyForG1G2) {
  for (auto [n, m, l] : small_triples()) {
    const auto labels = labels_at(n, m);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = i + 1; j < labels.size(); ++j) {
        const GroupParams a = P(labels[i], n, m, l), b = P(labels[j], n, m, l);
        const Verdict ab = distinguish_pair(a, b), ba = distinguish_pair(b, a);
        EXPECT_EQ(ab.outcome, ba.outcome) << params_name(a) << " " << params_name(b);
        EXPECT_EQ(ab.invariant, ba.invariant);
        EXPECT_EQ(ab.value_a, ba.value_b);
        const bool g12 = labels[i] == Family::kG1 && labels[j] == Family::kG2 && n > m && m > l;
        EXPECT_EQ(ab.outcome == Outcome::kIsomorphicAlgebrasVerified, g12)
            << params_name(a) << " " << params_name(b);
      }
    }
  }
}

}  // namespace
}  // namespace mip
