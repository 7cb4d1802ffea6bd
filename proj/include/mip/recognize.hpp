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

// Recognition of small 2-groups against presentations, brute-force
// isomorphism, and the maximal-quotient tables.

#ifndef MIP_RECOGNIZE_HPP_
#define MIP_RECOGNIZE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mip/concrete_group.hpp"
#include "mip/group.hpp"
#include "mip/subgroups.hpp"

namespace mip {

/// Default search budget for recognize().
inline constexpr std::size_t kRecognizeBudget = std::size_t{1} << 10;

using Presentation = std::variant<GroupParams, MaximalClassSpec>;

inline std::string presentation_name(const Presentation& p) {
  if (const auto* gp = std::get_if<GroupParams>(&p)) return gp->label();
  return std::get<MaximalClassSpec>(p).name();
}

inline std::uint64_t presentation_order(const Presentation& p) {
  if (const auto* gp = std::get_if<GroupParams>(&p)) return gp->order();
  return std::get<MaximalClassSpec>(p).order();
}

namespace detail {

/// Orders the images of the two generators must have.
inline std::pair<std::uint64_t, std::uint64_t> generator_orders(const Presentation& p) {
  if (const auto* gp = std::get_if<GroupParams>(&p)) {
    const Group model(*gp);
    return {element_order(model, model.x()), element_order(model, model.y())};
  }
  const auto& mc = std::get<MaximalClassSpec>(p);
  return {mc.kind == MaximalClassKind::kQuaternion ? 4u : 2u, std::uint64_t{1} << mc.k};
}

template <FiniteGroup Q>
bool theta_relations_hold(const Q& q, Elem g, Elem h, const GroupParams& p) {
  const Elem c = commutator(q, h, g);
  const std::uint64_t half_l = std::uint64_t{1} << (p.l - 1);
  const Elem wc = power_nonneg(q, c, half_l);
  if (power_nonneg(q, c, std::uint64_t{1} << p.l) != q.identity()) return false;
  const Elem c_m2 = q.inverse(q.mul(c, c));
  if (commutator(q, c, g) != c_m2 || commutator(q, c, h) != c_m2) return false;
  const Elem gx = power_nonneg(q, g, std::uint64_t{1} << p.n);
  if (gx != (p.theta.r ? wc : q.identity())) return false;
  const Elem hy = power_nonneg(q, h, std::uint64_t{1} << p.m);
  Elem rhs = power_nonneg(q, g, static_cast<std::uint64_t>(p.theta.s) << p.m);
  if (p.theta.t) rhs = q.mul(rhs, wc);
  return hy == rhs;
}

template <FiniteGroup Q>
bool maximal_class_relations_hold(const Q& q, Elem a, Elem b, const MaximalClassSpec& mc) {
  const std::uint64_t nb = std::uint64_t{1} << mc.k;
  if (power_nonneg(q, b, nb) != q.identity()) return false;
  const Elem a2 = q.mul(a, a);
  const Elem expect =
      mc.kind == MaximalClassKind::kQuaternion ? power_nonneg(q, b, nb / 2) : q.identity();
  if (a2 != expect) return false;
  return conjugate(q, b, a) == power_nonneg(q, b, static_cast<std::uint64_t>(mc.twist()));
}

template <FiniteGroup Q>
bool relations_hold(const Q& q, Elem g, Elem h, const Presentation& p) {
  if (const auto* gp = std::get_if<GroupParams>(&p)) return theta_relations_hold(q, g, h, *gp);
  return maximal_class_relations_hold(q, g, h, std::get<MaximalClassSpec>(p));
}

template <FiniteGroup Q>
std::vector<std::uint64_t> all_orders(const Q& q) {
  std::vector<std::uint64_t> orders(q.order());
  for (Elem g = 0; g < q.order(); ++g) orders[g] = element_order(q, g);
  return orders;
}

}  // namespace detail

/// First pair (g, h) in lexicographic order that generates Q and satisfies
/// the presentation, if any. Equal orders make the induced map an isomorphism.
template <FiniteGroup Q>
std::optional<std::pair<Elem, Elem>> find_generating_pair(
    const Q& q, const Presentation& p, const std::vector<std::uint64_t>& orders) {
  if (presentation_order(p) != q.order()) return std::nullopt;
  const auto [og, oh] = detail::generator_orders(p);
  std::vector<Elem> gs, hs;
  for (Elem e = 0; e < q.order(); ++e) {
    if (orders[e] == og) gs.push_back(e);
    if (orders[e] == oh) hs.push_back(e);
  }
  for (Elem g : gs) {
    for (Elem h : hs) {
      if (!detail::relations_hold(q, g, h, p)) continue;
      if (closure(q, {g, h}).size() == q.order()) return std::make_pair(g, h);
    }
  }
  return std::nullopt;
}

template <FiniteGroup Q>
std::optional<std::pair<Elem, Elem>> find_generating_pair(const Q& q, const Presentation& p) {
  return find_generating_pair(q, p, detail::all_orders(q));
}

/// Candidates that Q is isomorphic to.
template <FiniteGroup Q>
std::vector<Presentation> recognize(const Q& q, const std::vector<Presentation>& candidates,
                                    std::size_t budget = kRecognizeBudget) {
  if (q.order() > budget) {
    throw GuardExceeded("recognize: group order " + std::to_string(q.order()) +
                        " exceeds the search budget " + std::to_string(budget));
  }
  for (const auto& c : candidates) {
    if (presentation_order(c) != q.order()) {
      throw std::invalid_argument("recognize: candidate " + presentation_name(c) +
                                  " has a different order");
    }
  }
  const auto orders = detail::all_orders(q);
  std::vector<Presentation> out;
  for (const auto& c : candidates) {
    if (find_generating_pair(q, c, orders)) out.push_back(c);
  }
  return out;
}

/// Images in A of B's generators that define an isomorphism B -> A, if one
/// exists. A candidate assignment is extended along the Cayley graph of B;
/// it is a homomorphism iff every edge is consistent.
template <FiniteGroup A, FiniteGroup B>
std::optional<std::vector<Elem>> find_isomorphism(const A& a, const B& b,
                                                  std::size_t bound = kDefaultMaxOrder) {
  if (a.order() > bound || b.order() > bound) {
    throw GuardExceeded("brute-force isomorphism: order exceeds the bound " +
                        std::to_string(bound));
  }
  if (a.order() != b.order()) return std::nullopt;
  const auto oa = detail::all_orders(a);
  const auto ob = detail::all_orders(b);
  std::map<std::uint64_t, std::size_t> ha, hb;
  for (auto o : oa) ++ha[o];
  for (auto o : ob) ++hb[o];
  if (ha != hb) return std::nullopt;

  const auto bgens = b.generators();
  const std::size_t n = b.order();
  std::vector<std::vector<Elem>> choices(bgens.size());
  for (std::size_t i = 0; i < bgens.size(); ++i) {
    for (Elem e = 0; e < a.order(); ++e) {
      if (oa[e] == ob[bgens[i]]) choices[i].push_back(e);
    }
  }
  std::vector<Elem> images(bgens.size());
  std::vector<Elem> map(n);
  std::vector<char> mapped(n), used(n);
  std::vector<Elem> queue;
  queue.reserve(n);
  auto try_extend = [&]() {
    std::fill(mapped.begin(), mapped.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    queue.clear();
    map[b.identity()] = a.identity();
    mapped[b.identity()] = 1;
    used[a.identity()] = 1;
    queue.push_back(b.identity());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Elem u = queue[qi];
      for (std::size_t i = 0; i < bgens.size(); ++i) {
        const Elem v = b.mul(u, bgens[i]);
        const Elem img = a.mul(map[u], images[i]);
        if (mapped[v]) {
          if (map[v] != img) return false;
        } else {
          if (used[img]) return false;
          mapped[v] = 1;
          used[img] = 1;
          map[v] = img;
          queue.push_back(v);
        }
      }
    }
    return queue.size() == n;
  };
  std::vector<std::size_t> idx(bgens.size(), 0);
  if (bgens.empty()) {
    return n == 1 ? std::optional<std::vector<Elem>>(images) : std::nullopt;
  }
  for (const auto& ch : choices) {
    if (ch.empty()) return std::nullopt;
  }
  // Odometer over the image choices, first generator slowest.
  while (true) {
    for (std::size_t i = 0; i < bgens.size(); ++i) images[i] = choices[i][idx[i]];
    if (try_extend()) return images;
    std::size_t i = bgens.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

template <FiniteGroup A, FiniteGroup B>
bool brute_force_isomorphic(const A& a, const B& b, std::size_t bound = kDefaultMaxOrder) {
  return find_isomorphism(a, b, bound).has_value();
}

inline bool brute_force_isomorphic(const GroupParams& a, const GroupParams& b,
                                   std::size_t bound = kDefaultMaxOrder) {
  return brute_force_isomorphic(Group(a), Group(b), bound);
}

/// The family labels used to name groups at (n, m, l). For l >= 2 these are
/// pairwise non-isomorphic: all six when n > m, {G1, G5, G6} when n = m. For
/// l = 1 every literal presentation is tried.
inline std::vector<GroupParams> canonical_candidates(int n, int m, int l) {
  std::vector<GroupParams> out;
  if (l >= 2) {
    for (Family f : kAllFamilies) {
      if (n == m && f != Family::kG1 && f != Family::kG5 && f != Family::kG6) continue;
      out.push_back(GroupParams::of_family(f, n, m, l));
    }
  } else {
    for (Family f : kAllFamilies) {
      out.push_back(GroupParams::literal_family(f, n, m, l, Mode::kDegenerate));
    }
  }
  return out;
}

/// Maps a family label at (n, m, l) to the label that recognition reports for
/// the same group: the smallest isomorphic label among the canonical ones.
inline Family normalize_label(Family f, int n, int m, int l) {
  if (l >= 2) {
    if (n != m) return f;
    if (f == Family::kG2) return Family::kG1;
    if (f == Family::kG3 || f == Family::kG4) return Family::kG5;
    return f;
  }
  const Group target(GroupParams::literal_family(f, n, m, l, Mode::kDegenerate));
  for (Family g : kAllFamilies) {
    if (g == f) break;
    const Group other(GroupParams::literal_family(g, n, m, l, Mode::kDegenerate));
    if (brute_force_isomorphic(target, other)) return g;
  }
  return f;
}

struct ParamTriple {
  int n = 0, m = 0, l = 0;
  bool operator==(const ParamTriple&) const = default;
  std::string label() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
  }
};

/// One maximal quotient G/<w>.
struct QuotientEntry {
  Elem involution = 0;
  std::string involution_name;
  std::optional<int> column;         // 0, 1, 2 for (n-1,m,l), (n,m-1,l), (n,m,l-1)
  std::vector<Family> matches;       // every matching candidate label
  std::optional<Family> label;       // smallest match
};

struct QuotientTable {
  GroupParams params;
  std::array<ParamTriple, 3> columns;
  std::array<std::vector<Family>, 3> cells;  // sorted, distinct
  std::vector<QuotientEntry> entries;
};

inline std::array<ParamTriple, 3> quotient_columns(int n, int m, int l) {
  return {ParamTriple{n - 1, m, l}, ParamTriple{n, m - 1, l}, ParamTriple{n, m, l - 1}};
}

inline bool triple_admissible(const ParamTriple& t) {
  return t.m >= 1 && t.n >= t.m && t.l >= 1;
}

/// All maximal quotients of G, one per central involution, each recognized
/// against the labels at the three parameter triples of order |G|/2.
inline QuotientTable maximal_quotient_table(const Group& group,
                                            std::size_t budget = kRecognizeBudget) {
  const auto& p = group.params();
  if (p.n < 2) throw std::invalid_argument("maximal quotient table needs n >= 2");
  QuotientTable table;
  table.params = p;
  table.columns = quotient_columns(p.n, p.m, p.l);
  std::array<std::vector<GroupParams>, 3> candidates;
  for (int c = 0; c < 3; ++c) {
    const auto& t = table.columns[c];
    if (triple_admissible(t)) candidates[c] = canonical_candidates(t.n, t.m, t.l);
  }
  const SubgroupData soc = socle(group);
  for (Elem w : soc.elements) {
    if (w == group.identity()) continue;
    QuotientEntry entry;
    entry.involution = w;
    entry.involution_name = group.element_name(w);
    const ConcreteGroup q = quotient_by(group, w);
    if (q.order() > budget) {
      throw GuardExceeded("quotient order " + std::to_string(q.order()) +
                          " exceeds the search budget");
    }
    const auto orders = detail::all_orders(q);
    for (int c = 0; c < 3 && !entry.column; ++c) {
      for (const auto& cand : candidates[c]) {
        if (find_generating_pair(q, Presentation{cand}, orders)) {
          entry.column = c;
          entry.matches.push_back(*cand.family);
        }
      }
    }
    if (entry.column) {
      entry.label = *std::min_element(entry.matches.begin(), entry.matches.end());
      auto& cell = table.cells[*entry.column];
      if (std::find(cell.begin(), cell.end(), *entry.label) == cell.end()) {
        cell.push_back(*entry.label);
        std::sort(cell.begin(), cell.end());
      }
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

}  // namespace mip

#endif  // MIP_RECOGNIZE_HPP_
