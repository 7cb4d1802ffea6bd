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

// Invariant fingerprints of the groups G_theta and pairwise verdicts.

#ifndef MIP_REPORT_HPP_
#define MIP_REPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mip/base_analysis.hpp"
#include "mip/jennings.hpp"
#include "mip/power_maps.hpp"
#include "mip/recognize.hpp"
#include "mip/subgroups.hpp"

namespace mip {

/// Invariants of G/[G, G], from the orders of elements modulo [G, G].
inline std::vector<std::uint64_t> abelianization(const Group& g) {
  const SubgroupData d = derived_subgroup(g);
  std::map<int, std::size_t> counts;
  for (Elem e = 0; e < g.order(); ++e) {
    int log = 0;
    for (Elem p = e; !d.contains(p); p = g.mul(p, p)) ++log;
    ++counts[log];
  }
  return invariants_from_order_counts(std::move(counts));
}

struct QuotientRow {
  std::string involution;
  std::string target;  // "G2(2,1,1)" or "-" when nothing matched
};

struct InvariantReport {
  GroupParams params;
  std::uint64_t order = 0;
  int coclass = 0;
  std::vector<std::uint64_t> abelianization;
  std::vector<std::uint64_t> center;
  std::vector<std::uint64_t> socle;
  std::size_t kulshammer = 0;
  int quillen_rank = 0;
  std::uint64_t centralizer_exponent = 0;
  std::map<int, std::size_t> kernel_sizes;  // field degree -> |K(G)|
  std::optional<std::vector<QuotientRow>> quotients;
};

struct FingerprintOptions {
  std::vector<int> field_degrees{1};
  bool quotients = false;
};

inline std::string params_name(const GroupParams& p) {
  return p.family ? family_name(*p.family) + ParamTriple{p.n, p.m, p.l}.label() : p.label();
}

inline std::size_t kernel_size(const GroupParams& p, int field_degree) {
  const GroupAlgebra alg(p, FieldSpec(field_degree));
  const JenningsBasis basis(alg);
  return phi_kernel_size(basis);
}

inline InvariantReport fingerprint(const GroupParams& p, const FingerprintOptions& opts = {}) {
  const Group g(p);
  InvariantReport r;
  r.params = p;
  r.order = g.order();
  r.coclass = coclass(g);
  r.abelianization = abelianization(g);
  r.center = center(g).invariants;
  r.socle = socle(g).invariants;
  r.kulshammer = squares_class_count(g);
  r.quillen_rank = elementary_abelian_rank(g);
  r.centralizer_exponent = exponent(g, centralizer(g, derived_subgroup(g).elements));
  if (p.l >= 2) {
    for (int k : opts.field_degrees) r.kernel_sizes[k] = kernel_size(p, k);
  }
  if (opts.quotients && p.n >= 2) {
    std::vector<QuotientRow> rows;
    const QuotientTable t = maximal_quotient_table(g);
    for (const auto& e : t.entries) {
      std::string target = "-";
      if (e.label) target = family_name(*e.label) + t.columns[*e.column].label();
      rows.push_back({e.involution_name, target});
    }
    r.quotients = std::move(rows);
  }
  return r;
}

/// Fields compared when deciding whether two reports agree.
inline bool same_invariants(const InvariantReport& a, const InvariantReport& b) {
  return a.order == b.order && a.coclass == b.coclass && a.abelianization == b.abelianization &&
         a.center == b.center && a.socle == b.socle && a.kulshammer == b.kulshammer &&
         a.quillen_rank == b.quillen_rank && a.centralizer_exponent == b.centralizer_exponent &&
         a.kernel_sizes == b.kernel_sizes;
}

enum class Outcome { kDistinguished, kIsomorphicAlgebrasVerified, kCitedDistinct, kUndecided };

inline std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kDistinguished:
      return "distinguished";
    case Outcome::kIsomorphicAlgebrasVerified:
      return "isomorphic-algebras-verified";
    case Outcome::kCitedDistinct:
      return "cited-distinct";
    case Outcome::kUndecided:
      return "undecided";
  }
  return "?";
}

struct Verdict {
  GroupParams a, b;
  Outcome outcome = Outcome::kUndecided;
  std::string invariant;  // which invariant separated the pair
  std::string value_a, value_b;
  std::string citation;
  std::vector<std::pair<std::string, std::string>> evidence;
};

namespace detail {

inline bool is_pair(Family a, Family b, Family x, Family y) {
  return (a == x && b == y) || (a == y && b == x);
}

inline std::string join_checks(const std::vector<CheckResult>& checks) {
  std::size_t ok = 0;
  for (const auto& c : checks) ok += c.passed ? 1 : 0;
  return std::to_string(ok) + "/" + std::to_string(checks.size()) + " passed";
}

}  // namespace detail

/// Orders brute-force isomorphism tests are attempted at.
inline constexpr std::size_t kVerdictBruteForceOrder = std::size_t{1} << 9;

/// Compares center, Kulshammer count, Quillen rank and kernel size in that
/// order; then the crossed-base construction for (G1, G2); then the ranges
/// where a group-base argument separates the algebras.
inline Verdict distinguish_pair(const GroupParams& pa, const GroupParams& pb, int field_degree = 1) {
  if (pa.n != pb.n || pa.m != pb.m || pa.l != pb.l) {
    throw std::invalid_argument("distinguish_pair needs equal (n, m, l)");
  }
  if (!pa.family || !pb.family) throw std::invalid_argument("distinguish_pair needs family labels");
  const int n = pa.n, m = pa.m, l = pa.l;
  Verdict v;
  v.a = pa;
  v.b = pb;
  const Family fa = *pa.family, fb = *pb.family;
  if (normalize_label(fa, n, m, l) == normalize_label(fb, n, m, l)) {
    v.evidence.push_back({"groups_isomorphic", "true"});
    return v;
  }

  FingerprintOptions opts;
  opts.field_degrees = {field_degree};
  const InvariantReport ra = fingerprint(pa, opts), rb = fingerprint(pb, opts);
  auto differ = [&v](const std::string& name, const std::string& x, const std::string& y) {
    if (x == y) return false;
    v.outcome = Outcome::kDistinguished;
    v.invariant = name;
    v.value_a = x;
    v.value_b = y;
    return true;
  };
  if (differ("center", invariants_name(ra.center), invariants_name(rb.center))) return v;
  if (differ("kulshammer", std::to_string(ra.kulshammer), std::to_string(rb.kulshammer))) return v;
  if (differ("quillen", std::to_string(ra.quillen_rank), std::to_string(rb.quillen_rank))) return v;
  if (l >= 2 && differ("kernel", std::to_string(ra.kernel_sizes.at(field_degree)),
                       std::to_string(rb.kernel_sizes.at(field_degree)))) {
    return v;
  }

  if (detail::is_pair(fa, fb, Family::kG1, Family::kG2) && n > m && m > l && l >= 2) {
    CrossedBase base = crossed_base(n, m, l, FieldSpec(field_degree));
    const auto& log = verify_relations(base);
    v.evidence.push_back({"relations", detail::join_checks(log)});
    if (all_passed(log)) {
      const std::size_t rank = hom_rank(base);
      v.evidence.push_back({"rank", std::to_string(rank)});
      if (rank == base.algebra->dim()) v.outcome = Outcome::kIsomorphicAlgebrasVerified;
    }
    v.evidence.push_back({"centralizer_exponents", std::to_string(ra.centralizer_exponent) + "," +
                                                       std::to_string(rb.centralizer_exponent)});
    if (ra.order <= kVerdictBruteForceOrder) {
      v.evidence.push_back(
          {"groups_isomorphic", brute_force_isomorphic(pa, pb) ? "true" : "false"});
    }
    return v;
  }

  const bool g34 = detail::is_pair(fa, fb, Family::kG3, Family::kG4) && n > m && m > l;
  const bool g56 = detail::is_pair(fa, fb, Family::kG5, Family::kG6) &&
                   (m > l || (n == m && m <= l));
  if (l >= 2 && (g34 || g56)) {
    v.outcome = Outcome::kCitedDistinct;
    if (g34) {
      v.citation = "G3/G4 with n > m > l: group-base argument via the Gamma power map";
    } else if (m > l) {
      v.citation = "G5/G6 with m > l: group-base argument via the agemo of the center";
    } else if (m < l) {
      v.citation = "G5/G6 with n = m < l: group-base argument via alpha_A = alpha_B";
    } else {
      v.citation = "G5/G6 with n = m = l: group-base argument via alpha_A = alpha_B";
    }
    // Instance checks of the ingredients on G_a itself.
    const GroupAlgebra alg(pa, FieldSpec(field_degree));
    const JenningsBasis basis(alg);
    GammaFiltration gamma(basis);
    const AlgebraElement W = alg.W();
    v.evidence.push_back({"psi_Z_equals_W", gamma.psi_eval(alg.Z()) == gamma.psi_reduce(W)
                                                ? "true"
                                                : "false"});
    const int r = std::max(l, n - 1);
    v.evidence.push_back({"agemo_center_r" + std::to_string(r),
                          agemo_center_equality(alg, r).equal ? "true" : "false"});
  }
  return v;
}

}  // namespace mip

#endif  // MIP_REPORT_HPP_
