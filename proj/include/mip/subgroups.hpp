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

// Subgroups as explicit element sets, plus the conjugacy and elementary
// abelian data used as group-algebra invariants.

#ifndef MIP_SUBGROUPS_HPP_
#define MIP_SUBGROUPS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mip/group.hpp"

namespace mip {

struct SubgroupData {
  std::vector<Elem> generators;
  std::vector<Elem> elements;  // sorted
  bool abelian = false;
  /// Cyclic factor orders, largest first; empty unless abelian.
  std::vector<std::uint64_t> invariants;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem g) const { return std::binary_search(elements.begin(), elements.end(), g); }
};

/// "C8 x C4 x C2", "1" for the trivial group.
inline std::string invariants_name(const std::vector<std::uint64_t>& invariants) {
  if (invariants.empty()) return "1";
  std::string out;
  for (std::uint64_t k : invariants) {
    if (!out.empty()) out += " x ";
    out += "C" + std::to_string(k);
  }
  return out;
}

/// Sorted elements of the subgroup generated by `gens`.
template <FiniteGroup G>
std::vector<Elem> closure(const G& group, const std::vector<Elem>& gens) {
  std::vector<char> seen(group.order(), 0);
  std::vector<Elem> out{group.identity()};
  seen[group.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      const Elem h = group.mul(out[i], s);
      if (!seen[h]) {
        seen[h] = 1;
        out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Invariants of an abelian 2-group from the sizes of its Omega layers:
/// log2 |{g : g^(2^i) = 1}| - log2 |{g : g^(2^(i-1)) = 1}| counts the cyclic
/// factors of order >= 2^i.
/// Invariants of an abelian 2-group from how many elements have each order
/// (keys are log2 of the order). The counts may all be scaled by the same
/// power of 2, as when counting cosets through their representatives.
inline std::vector<std::uint64_t> invariants_from_order_counts(
    std::map<int, std::size_t> by_log_order) {
  std::vector<int> at_least;  // at_least[i-1] = #factors of order >= 2^i
  std::size_t cumulative = 0;
  int prev_log = 0;
  const int max_log = by_log_order.empty() ? 0 : by_log_order.rbegin()->first;
  for (int i = 0; i <= max_log; ++i) {
    cumulative += by_log_order.count(i) ? by_log_order[i] : 0;
    const int log = std::countr_zero(cumulative);
    if (i > 0) at_least.push_back(log - prev_log);
    prev_log = log;
  }
  std::vector<std::uint64_t> out;
  for (int i = static_cast<int>(at_least.size()); i >= 1; --i) {
    const int exact = at_least[i - 1] - (i < static_cast<int>(at_least.size()) ? at_least[i] : 0);
    for (int j = 0; j < exact; ++j) out.push_back(std::uint64_t{1} << i);
  }
  return out;
}

template <FiniteGroup G>
std::vector<std::uint64_t> abelian_invariants(const G& group, const std::vector<Elem>& elements) {
  std::map<int, std::size_t> by_log_order;
  for (Elem g : elements) ++by_log_order[std::countr_zero(element_order(group, g))];
  return invariants_from_order_counts(std::move(by_log_order));
}

template <FiniteGroup G>
SubgroupData make_subgroup(const G& group, std::vector<Elem> gens) {
  SubgroupData s;
  s.elements = closure(group, gens);
  s.generators = std::move(gens);
  s.abelian = true;
  for (std::size_t i = 0; i < s.generators.size() && s.abelian; ++i) {
    for (std::size_t j = i + 1; j < s.generators.size(); ++j) {
      if (group.mul(s.generators[i], s.generators[j]) !=
          group.mul(s.generators[j], s.generators[i])) {
        s.abelian = false;
        break;
      }
    }
  }
  if (s.abelian) s.invariants = abelian_invariants(group, s.elements);
  return s;
}

template <FiniteGroup G>
bool is_central(const G& group, Elem g) {
  for (Elem s : group.generators()) {
    if (group.mul(g, s) != group.mul(s, g)) return false;
  }
  return true;
}

/// {g : gs = sg for all s in set}.
template <FiniteGroup G>
SubgroupData centralizer(const G& group, const std::vector<Elem>& set) {
  std::vector<Elem> members;
  for (Elem g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (Elem s : set) {
      if (group.mul(g, s) != group.mul(s, g)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(g);
  }
  // The full member list generates; it is small enough at our scale.
  return make_subgroup(group, members);
}

template <FiniteGroup G>
SubgroupData center(const G& group) {
  std::vector<Elem> members;
  for (Elem g = 0; g < group.order(); ++g) {
    if (is_central(group, g)) members.push_back(g);
  }
  return make_subgroup(group, members);
}

/// Smallest normal subgroup containing `seeds`.
template <FiniteGroup G>
std::vector<Elem> normal_closure(const G& group, std::vector<Elem> seeds) {
  const auto gens = group.generators();
  std::vector<char> seen(group.order(), 0);
  std::vector<Elem> pool;
  for (Elem s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      pool.push_back(s);
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (Elem g : gens) {
      const Elem c = conjugate(group, pool[i], g);
      if (!seen[c]) {
        seen[c] = 1;
        pool.push_back(c);
      }
    }
  }
  return closure(group, pool);
}

template <FiniteGroup G>
SubgroupData derived_subgroup(const G& group) {
  const auto gens = group.generators();
  std::vector<Elem> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      seeds.push_back(commutator(group, gens[j], gens[i]));
    }
  }
  const auto elems = normal_closure(group, seeds);
  SubgroupData s = make_subgroup(group, elems);
  s.generators = seeds;
  return s;
}

/// For a 2-group the Frattini subgroup is generated by the squares.
template <FiniteGroup G>
SubgroupData frattini(const G& group) {
  std::vector<Elem> squares;
  for (Elem g = 0; g < group.order(); ++g) squares.push_back(group.mul(g, g));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  SubgroupData s;
  s.elements = closure(group, squares);
  s.generators = squares;
  s.abelian = true;
  for (Elem a : s.elements) {
    for (Elem b : s.elements) {
      if (group.mul(a, b) != group.mul(b, a)) {
        s.abelian = false;
        break;
      }
    }
    if (!s.abelian) break;
  }
  if (s.abelian) s.invariants = abelian_invariants(group, s.elements);
  return s;
}

/// Subgroup generated by the central involutions.
template <FiniteGroup G>
SubgroupData socle(const G& group) {
  std::vector<Elem> involutions;
  for (Elem g = 1; g < group.order(); ++g) {
    if (group.mul(g, g) == group.identity() && is_central(group, g)) involutions.push_back(g);
  }
  return make_subgroup(group, involutions);
}

/// Agemo: subgroup generated by the 2^r-th powers. Abelian subgroups only.
template <FiniteGroup G>
SubgroupData agemo(const G& group, const SubgroupData& sub, int r) {
  if (!sub.abelian) throw std::invalid_argument("agemo is only supported on abelian subgroups");
  std::vector<Elem> powers;
  for (Elem g : sub.elements) {
    powers.push_back(power_nonneg(group, g, std::uint64_t{1} << r));
  }
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
  return make_subgroup(group, powers);
}

template <FiniteGroup G>
std::uint64_t exponent(const G& group, const SubgroupData& sub) {
  std::uint64_t e = 1;
  for (Elem g : sub.elements) e = std::max(e, element_order(group, g));
  return e;
}

struct NamedSubgroups {
  SubgroupData center;
  SubgroupData derived;
  SubgroupData frattini;
  SubgroupData socle;
};

template <FiniteGroup G>
NamedSubgroups named_subgroups(const G& group) {
  return {center(group), derived_subgroup(group), frattini(group), socle(group)};
}

/// Classes as orbits under conjugation by the generators, each sorted, the
/// list ordered by smallest member.
template <FiniteGroup G>
std::vector<std::vector<Elem>> conjugacy_classes(const G& group) {
  const auto gens = group.generators();
  std::vector<char> seen(group.order(), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem g = 0; g < group.order(); ++g) {
    if (seen[g]) continue;
    std::vector<Elem> cls{g};
    seen[g] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Elem s : gens) {
        const Elem c = conjugate(group, cls[i], s);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Number of conjugacy classes made of squares.
template <FiniteGroup G>
std::size_t squares_class_count(const G& group) {
  std::vector<char> is_square(group.order(), 0);
  for (Elem g = 0; g < group.order(); ++g) is_square[group.mul(g, g)] = 1;
  std::size_t count = 0;
  for (const auto& cls : conjugacy_classes(group)) {
    if (is_square[cls.front()]) ++count;
  }
  return count;
}

/// Largest rank of an elementary abelian subgroup, by backtracking over the
/// commuting graph of involutions.
template <FiniteGroup G>
int elementary_abelian_rank(const G& group) {
  std::vector<Elem> inv;
  for (Elem g = 1; g < group.order(); ++g) {
    if (group.mul(g, g) == group.identity()) inv.push_back(g);
  }
  if (inv.empty()) return 0;
  const std::size_t k = inv.size();
  std::vector<std::vector<char>> commute(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const bool c = group.mul(inv[i], inv[j]) == group.mul(inv[j], inv[i]);
      commute[i][j] = commute[j][i] = c;
    }
  }
  int best = 1;
  std::vector<std::size_t> chosen;
  std::vector<char> in_span(group.order(), 0);
  std::vector<Elem> span{group.identity()};
  in_span[group.identity()] = 1;
  const int max_possible = std::countr_zero(group.order());
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (best == max_possible) return;
    for (std::size_t i = start; i < k; ++i) {
      if (in_span[inv[i]]) continue;
      bool ok = true;
      for (std::size_t c : chosen) {
        if (!commute[c][i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = span.size();
      for (std::size_t s = 0; s < old; ++s) {
        const Elem e = group.mul(span[s], inv[i]);
        in_span[e] = 1;
        span.push_back(e);
      }
      chosen.push_back(i);
      extend(i + 1);
      chosen.pop_back();
      for (std::size_t s = old; s < span.size(); ++s) in_span[span[s]] = 0;
      span.resize(old);
      if (best == max_possible) return;
    }
  };
  extend(0);
  return best;
}

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], down to the trivial group.
template <FiniteGroup G>
std::vector<std::vector<Elem>> lower_central_series(const G& group) {
  const auto gens = group.generators();
  std::vector<std::vector<Elem>> series;
  std::vector<Elem> current(group.order());
  for (Elem g = 0; g < group.order(); ++g) current[g] = g;
  series.push_back(current);
  while (current.size() > 1) {
    std::vector<Elem> seeds;
    for (Elem a : current) {
      for (Elem s : gens) seeds.push_back(commutator(group, a, s));
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    auto next = normal_closure(group, seeds);
    if (next.size() == current.size()) throw std::logic_error("group is not nilpotent");
    current = std::move(next);
    series.push_back(current);
  }
  return series;
}

template <FiniteGroup G>
int nilpotency_class(const G& group) {
  return static_cast<int>(lower_central_series(group).size()) - 1;
}

/// log2 |G| minus the nilpotency class.
template <FiniteGroup G>
int coclass(const G& group) {
  return std::countr_zero(group.order()) - nilpotency_class(group);
}

}  // namespace mip

#endif  // MIP_SUBGROUPS_HPP_
