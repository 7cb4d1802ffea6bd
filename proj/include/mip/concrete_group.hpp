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

#ifndef MIP_CONCRETE_GROUP_HPP_
#define MIP_CONCRETE_GROUP_HPP_

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mip/group.hpp"

namespace mip {

/// Largest table-backed group. The table alone is order^2 * 4 bytes.
inline constexpr std::size_t kMaxConcreteOrder = std::size_t{1} << 11;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity. Used for quotients and the maximal-class reference groups.
class ConcreteGroup {
 public:
  ConcreteGroup(std::string name, std::size_t order, std::vector<Elem> table,
                std::vector<Elem> generators)
      : name_(std::move(name)),
        order_(order),
        table_(std::move(table)),
        generators_(std::move(generators)) {
    if (order_ == 0 || !std::has_single_bit(order_)) {
      throw std::invalid_argument("group order must be a power of 2");
    }
    if (order_ > kMaxConcreteOrder) throw std::invalid_argument("concrete group too large");
    if (table_.size() != order_ * order_) throw std::invalid_argument("table size mismatch");
    inverse_.assign(order_, order_);
    for (Elem g = 0; g < order_; ++g) {
      for (Elem h = 0; h < order_; ++h) {
        if (table_[g * order_ + h] == 0) {
          inverse_[g] = h;
          break;
        }
      }
      if (inverse_[g] == order_) throw std::invalid_argument("element without inverse");
    }
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mul(Elem g, Elem h) const { return table_[g * order_ + h]; }
  Elem inverse(Elem g) const { return inverse_[g]; }
  std::vector<Elem> generators() const { return generators_; }

  /// Exhaustive group-axiom check; O(order^3) for associativity.
  bool is_group() const {
    for (Elem g = 0; g < order_; ++g) {
      if (mul(0, g) != g || mul(g, 0) != g) return false;
      for (Elem h = 0; h < order_; ++h) {
        if (mul(g, h) >= order_) return false;
        for (Elem k = 0; k < order_; ++k) {
          if (mul(mul(g, h), k) != mul(g, mul(h, k))) return false;
        }
      }
    }
    return true;
  }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> generators_;
  std::vector<Elem> inverse_;
};

/// Quotient G/<w> for a central involution w. Cosets {g, gw} are numbered by
/// increasing min(g, gw), so the identity coset is 0.
template <FiniteGroup G>
ConcreteGroup quotient_by(const G& group, Elem w, std::string name = "quotient") {
  if (w == group.identity() || group.mul(w, w) != group.identity()) {
    throw std::invalid_argument("quotient needs a non-trivial involution");
  }
  for (Elem gen : group.generators()) {
    if (group.mul(gen, w) != group.mul(w, gen)) {
      throw std::invalid_argument("quotient needs a central involution");
    }
  }
  const std::size_t n = group.order();
  if (n / 2 > kMaxConcreteOrder) throw std::invalid_argument("quotient too large");
  std::vector<Elem> coset(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  reps.reserve(n / 2);
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] != n) continue;
    const Elem id = static_cast<Elem>(reps.size());
    coset[g] = id;
    coset[group.mul(g, w)] = id;
    reps.push_back(g);
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      table[i * q + j] = coset[group.mul(reps[i], reps[j])];
    }
  }
  std::vector<Elem> gens;
  for (Elem gen : group.generators()) gens.push_back(coset[gen]);
  return ConcreteGroup(std::move(name), q, std::move(table), std::move(gens));
}

/// Maximal-class 2-groups of order 2^(k+1), k >= 2:
///   dihedral      <a, b | a^2 = 1,           b^(2^k) = 1, b^a = b^-1>
///   semidihedral  <a, b | a^2 = 1,           b^(2^k) = 1, b^a = b^(2^(k-1)-1)>  (k >= 3)
///   quaternion    <a, b | a^2 = b^(2^(k-1)), b^(2^k) = 1, b^a = b^-1>
enum class MaximalClassKind { kDihedral, kSemidihedral, kQuaternion };

struct MaximalClassSpec {
  MaximalClassKind kind;
  int k;  // log2 of the order of b

  std::size_t order() const { return std::size_t{1} << (k + 1); }
  std::int64_t twist() const {
    const std::int64_t nb = std::int64_t{1} << k;
    return kind == MaximalClassKind::kSemidihedral ? nb / 2 - 1 : nb - 1;
  }
  std::string name() const {
    const char* prefix = kind == MaximalClassKind::kDihedral       ? "D"
                         : kind == MaximalClassKind::kSemidihedral ? "SD"
                                                                   : "Q";
    return prefix + std::to_string(order());
  }
};

/// Elements a^i b^j are numbered i * 2^k + j; generators are (a, b).
inline ConcreteGroup make_maximal_class(const MaximalClassSpec& spec) {
  if (spec.k < 2 || (spec.kind == MaximalClassKind::kSemidihedral && spec.k < 3)) {
    throw std::invalid_argument("maximal-class group too small: " + spec.name());
  }
  const std::uint64_t nb = std::uint64_t{1} << spec.k;
  const std::size_t n = spec.order();
  const std::uint64_t twist = static_cast<std::uint64_t>(spec.twist());
  std::vector<Elem> table(n * n);
  for (Elem g = 0; g < n; ++g) {
    const std::uint64_t i1 = g / nb, j1 = g % nb;
    for (Elem h = 0; h < n; ++h) {
      const std::uint64_t i2 = h / nb, j2 = h % nb;
      // a^i1 b^j1 a^i2 b^j2 = a^(i1+i2) (b^j1)^(a^i2) b^j2.
      std::uint64_t j = (i2 ? j1 * twist : j1) + j2;
      std::uint64_t i = i1 + i2;
      if (i == 2) {
        i = 0;
        if (spec.kind == MaximalClassKind::kQuaternion) j += nb / 2;
      }
      table[g * n + h] = static_cast<Elem>(i * nb + j % nb);
    }
  }
  return ConcreteGroup(spec.name(), n, std::move(table),
                       {static_cast<Elem>(nb), static_cast<Elem>(1)});
}

/// Parses "d16", "sd16" / "s16", "q16" (case-insensitive).
inline MaximalClassSpec parse_maximal_class(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  MaximalClassKind kind;
  std::size_t digits = 1;
  if (text.rfind("sd", 0) == 0) {
    kind = MaximalClassKind::kSemidihedral;
    digits = 2;
  } else if (text.rfind('s', 0) == 0) {
    kind = MaximalClassKind::kSemidihedral;
  } else if (text.rfind('d', 0) == 0) {
    kind = MaximalClassKind::kDihedral;
  } else if (text.rfind('q', 0) == 0) {
    kind = MaximalClassKind::kQuaternion;
  } else {
    throw std::invalid_argument("unknown maximal-class group '" + text + "'");
  }
  const std::string number = text.substr(digits);
  if (number.empty() || number.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad group order in '" + text + "'");
  }
  const unsigned long order = std::stoul(number);
  if (order < 8 || !std::has_single_bit(order)) {
    throw std::invalid_argument("maximal-class order must be a power of 2 >= 8");
  }
  return {kind, std::countr_zero(order) - 1};
}

}  // namespace mip

#endif  // MIP_CONCRETE_GROUP_HPP_
