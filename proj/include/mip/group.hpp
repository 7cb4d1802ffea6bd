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

// The groups G_theta(n, m, l) generated by x, y, z subject to
//
//   x^(2^n) = z^(r 2^(l-1)),  y^(2^m) = x^(s 2^m) z^(t 2^(l-1)),  z^(2^l) = 1,
//   [y, x] = z,  [z, x] = z^-2,  [z, y] = z^-2,
//
// realized on the normal forms x^a y^b z^c by a closed-form product.

#ifndef MIP_GROUP_HPP_
#define MIP_GROUP_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mip {

/// Opaque element id inside one finite group; the identity is always 0.
using Elem = std::uint32_t;

/// Common surface of the closed-form groups and the table-backed ones.
template <typename G>
concept FiniteGroup = requires(const G& g, Elem a, Elem b) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.identity() } -> std::same_as<Elem>;
  { g.mul(a, b) } -> std::same_as<Elem>;
  { g.inverse(a) } -> std::same_as<Elem>;
  { g.generators() } -> std::convertible_to<std::vector<Elem>>;
};

/// The six isomorphism families of two-generated 2-groups with dihedral
/// central quotient, printed as G1..G6.
enum class Family : std::uint8_t { kG1 = 1, kG2, kG3, kG4, kG5, kG6 };

inline constexpr Family kAllFamilies[] = {Family::kG1, Family::kG2, Family::kG3,
                                          Family::kG4, Family::kG5, Family::kG6};

inline int family_index(Family f) { return static_cast<int>(f); }

inline std::string family_name(Family f) { return "G" + std::to_string(family_index(f)); }

inline Family family_from_index(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("family index must be 1..6");
  return static_cast<Family>(i);
}

/// Accepts "3", "G3" or "g3".
inline Family parse_family(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'G' || digits[0] == 'g')) digits.erase(0, 1);
  if (digits.size() != 1 || digits[0] < '1' || digits[0] > '6') {
    throw std::invalid_argument("unknown family label '" + text + "'");
  }
  return family_from_index(digits[0] - '0');
}

struct Theta {
  int r = 0;
  int s = 0;
  int t = 0;
  bool operator==(const Theta&) const = default;
};

/// theta of the defining relations of each family: G1..G6 map to
/// (0,0,0), (0,1,0), (0,0,1), (0,1,1), (1,0,0), (1,1,0).
inline Theta family_theta(Family f) {
  switch (f) {
    case Family::kG1: return {0, 0, 0};
    case Family::kG2: return {0, 1, 0};
    case Family::kG3: return {0, 0, 1};
    case Family::kG4: return {0, 1, 1};
    case Family::kG5: return {1, 0, 0};
    case Family::kG6: return {1, 1, 0};
  }
  throw std::invalid_argument("bad family");
}

enum class Mode {
  kStandard,    // l >= 2
  kDegenerate,  // l >= 1; used for the l-1 quotients of the classification
};

/// Largest n + m + l accepted anywhere. Element ids are 32-bit and every
/// algorithm here is at least linear in the group order.
inline constexpr int kMaxLogOrder = 20;

/// Default order guard for brute-force searches and table scopes.
inline constexpr std::size_t kDefaultMaxOrder = 4096;

/// A size guard refused the computation; distinct from bad input.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupParams {
  std::optional<Family> family;
  Theta theta;
  int n = 1;
  int m = 1;
  int l = 2;
  Mode mode = Mode::kStandard;
  /// Literal presentation of a family label outside its canonical range
  /// (G2, G4 with n = m). Only built on request, never by a parser.
  bool literal = false;

  std::uint64_t order() const { return std::uint64_t{1} << (n + m + l); }
  int log_order() const { return n + m + l; }

  /// Family-labelled parameters. G2 and G4 are rejected when n = m.
  static GroupParams of_family(Family f, int n, int m, int l, Mode mode = Mode::kStandard) {
    GroupParams p;
    p.family = f;
    p.theta = family_theta(f);
    p.n = n;
    p.m = m;
    p.l = l;
    p.mode = mode;
    p.validate();
    return p;
  }

  /// Raw theta; must lie in the parameter box 0<=r<=1, 0<=s<2^(n-m), 0<=t<=1.
  static GroupParams of_theta(Theta theta, int n, int m, int l, Mode mode = Mode::kStandard) {
    GroupParams p;
    p.theta = theta;
    p.n = n;
    p.m = m;
    p.l = l;
    p.mode = mode;
    p.validate();
    return p;
  }

  /// The family's own defining relations regardless of canonical ranges.
  static GroupParams literal_family(Family f, int n, int m, int l, Mode mode = Mode::kStandard) {
    GroupParams p;
    p.family = f;
    p.theta = family_theta(f);
    p.n = n;
    p.m = m;
    p.l = l;
    p.mode = mode;
    p.literal = true;
    p.validate();
    return p;
  }

  void validate() const {
    if (m < 1 || n < m) {
      throw std::invalid_argument("need n >= m >= 1, got n=" + std::to_string(n) +
                                  " m=" + std::to_string(m));
    }
    if (l < 1 || (mode == Mode::kStandard && l < 2)) {
      throw std::invalid_argument(
          "need l >= 2 (l = 1 only in degenerate mode), got l=" + std::to_string(l));
    }
    if (n + m + l > kMaxLogOrder) {
      throw std::invalid_argument("group order 2^" + std::to_string(n + m + l) +
                                  " is beyond the supported range");
    }
    if (theta.r < 0 || theta.r > 1 || theta.t < 0 || theta.t > 1) {
      throw std::invalid_argument("theta r and t must be 0 or 1");
    }
    if (family && !literal) {
      if (theta != family_theta(*family)) {
        throw std::invalid_argument("theta does not match family label");
      }
      if (n == m && (*family == Family::kG2 || *family == Family::kG4)) {
        throw std::invalid_argument(family_name(*family) +
                                    " is not canonical when n = m (theta needs s = 0)");
      }
      return;
    }
    if (family && literal) return;
    const long s_max = (1L << (n - m)) - 1;
    if (theta.s < 0 || theta.s > s_max) {
      throw std::invalid_argument("theta s must lie in 0.." + std::to_string(s_max));
    }
  }

  std::string label() const {
    std::string args = "(" + std::to_string(n) + "," + std::to_string(m) + "," +
                       std::to_string(l) + ")";
    if (family) return family_name(*family) + args;
    return "theta(" + std::to_string(theta.r) + "," + std::to_string(theta.s) + "," +
           std::to_string(theta.t) + ")" + args;
  }

  bool operator==(const GroupParams&) const = default;
};

/// Theta-cell classification: returns the family label whose cell contains
/// theta and the canonical representative of that cell.
inline std::pair<Family, GroupParams> reduce_theta(Theta theta, int n, int m, int l,
                                                   Mode mode = Mode::kStandard) {
  const GroupParams raw = GroupParams::of_theta(theta, n, m, l, mode);  // range check
  (void)raw;
  const int s0 = theta.s % 2;
  Family f;
  if (theta.r == 0) {
    if (theta.t == 0) {
      f = s0 == 0 ? Family::kG1 : Family::kG2;
    } else {
      f = s0 == 0 ? Family::kG3 : Family::kG4;
    }
  } else if (n == m && theta == Theta{1, 0, 1}) {
    f = Family::kG6;
  } else {
    f = s0 == 0 ? Family::kG5 : Family::kG6;
  }
  return {f, GroupParams::of_family(f, n, m, l, mode)};
}

/// Normal form x^a y^b z^c.
struct GroupElement {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  bool operator==(const GroupElement&) const = default;
};

/// A group G_theta(n, m, l) with the closed-form product on normal forms.
/// Immutable; all members are safe to call concurrently.
class Group {
 public:
  explicit Group(GroupParams params) : params_(std::move(params)) {
    params_.validate();
    const int n = params_.n;
    const int m = params_.m;
    const int l = params_.l;
    big_n_ = 1u << n;
    big_m_ = 1u << m;
    big_l_ = 1u << l;
    half_l_ = big_l_ >> 1;
    shift_b_ = static_cast<unsigned>(l);
    shift_a_ = static_cast<unsigned>(m + l);
    // Fold constants: x^(2^n) -> z^(r 2^(l-1)) and y^(2^m) -> x^(s 2^m) z^(t 2^(l-1)).
    fold_a_to_c_ = static_cast<std::uint32_t>(params_.theta.r) * half_l_;
    fold_b_to_a_ = static_cast<std::uint32_t>(params_.theta.s) * big_m_;
    fold_b_to_c_ = static_cast<std::uint32_t>(params_.theta.t) * half_l_;
  }

  const GroupParams& params() const { return params_; }
  std::size_t order() const { return std::size_t{1} << (params_.n + params_.m + params_.l); }
  Elem identity() const { return 0; }

  Elem id(GroupElement g) const {
    return (g.a << shift_a_) | (g.b << shift_b_) | g.c;
  }
  GroupElement element(Elem e) const {
    return {e >> shift_a_, (e >> shift_b_) & (big_m_ - 1), e & (big_l_ - 1)};
  }
  bool valid(GroupElement g) const { return g.a < big_n_ && g.b < big_m_ && g.c < big_l_; }

  GroupElement multiply(GroupElement g, GroupElement h) const {
    // y^b1 x^a2 = x^a2 y^b1 z^(b1 a2 mod 2); z^c x^a = x^a z^(c (-1)^a); same for y.
    std::uint32_t c = (g.b & h.a & 1u) + ((h.a & 1u) ? big_l_ - g.c : g.c);
    if (h.b & 1u) c = big_l_ - (c & (big_l_ - 1));
    c += h.c;
    std::uint32_t a = g.a + h.a;
    std::uint32_t b = g.b + h.b;
    if (b >= big_m_) {
      b -= big_m_;
      a += fold_b_to_a_;
      c += fold_b_to_c_;
    }
    while (a >= big_n_) {
      a -= big_n_;
      c += fold_a_to_c_;
    }
    return {a, b, c & (big_l_ - 1)};
  }

  Elem mul(Elem g, Elem h) const { return id(multiply(element(g), element(h))); }

  /// g^(ord(g) - 1).
  Elem inverse(Elem g) const;

  std::vector<Elem> generators() const { return {x(), y()}; }

  Elem x() const { return id({1, 0, 0}); }
  Elem y() const { return id({0, big_m_ > 1 ? 1u : 0u, 0}); }
  Elem z() const { return id({0, 0, 1}); }
  /// w = z^(2^(l-1)), the central involution of the derived subgroup.
  Elem w() const { return id({0, 0, half_l_}); }

  std::string element_name(Elem e) const {
    const GroupElement g = element(e);
    std::string out;
    auto term = [&out](const char* sym, std::uint32_t k) {
      if (k == 0) return;
      if (!out.empty()) out += ' ';
      out += sym;
      if (k != 1) out += "^" + std::to_string(k);
    };
    term("x", g.a);
    term("y", g.b);
    term("z", g.c);
    return out.empty() ? "1" : out;
  }

 private:
  GroupParams params_;
  std::uint32_t big_n_, big_m_, big_l_, half_l_;
  unsigned shift_a_, shift_b_;
  std::uint32_t fold_a_to_c_, fold_b_to_a_, fold_b_to_c_;
};

// --- Element operations shared by every FiniteGroup -------------------------

template <typename G>
Elem power_nonneg(const G& group, Elem g, std::uint64_t k) {
  Elem result = group.identity();
  while (k != 0) {
    if (k & 1u) result = group.mul(result, g);
    g = group.mul(g, g);
    k >>= 1;
  }
  return result;
}

/// Least 2^e with g^(2^e) = 1. Elements of a 2-group only.
template <typename G>
std::uint64_t element_order(const G& group, Elem g) {
  std::uint64_t order = 1;
  while (g != group.identity()) {
    g = group.mul(g, g);
    order <<= 1;
    if (order > group.order()) throw std::logic_error("element order is not a power of 2");
  }
  return order;
}

/// g^k for any integer k; negative k is the inverse power.
template <typename G>
Elem power(const G& group, Elem g, std::int64_t k) {
  if (k >= 0) return power_nonneg(group, g, static_cast<std::uint64_t>(k));
  return group.inverse(power_nonneg(group, g, static_cast<std::uint64_t>(-k)));
}

/// [g, h] = g^-1 h^-1 g h.
template <typename G>
Elem commutator(const G& group, Elem g, Elem h) {
  return group.mul(group.mul(group.inverse(g), group.inverse(h)), group.mul(g, h));
}

/// g^h = h^-1 g h.
template <typename G>
Elem conjugate(const G& group, Elem g, Elem h) {
  return group.mul(group.mul(group.inverse(h), g), h);
}

inline Elem Group::inverse(Elem g) const {
  return power_nonneg(*this, g, element_order(*this, g) - 1);
}

/// Checks that G/Z(G) is dihedral of order 2^(l+1): x, y are non-central
/// with central squares and z = [y, x] is not central.
inline void validate_dihedral_central_quotient(const Group& group) {
  const auto& p = group.params();
  auto is_central = [&group](Elem e) {
    return group.mul(e, group.x()) == group.mul(group.x(), e) &&
           group.mul(e, group.y()) == group.mul(group.y(), e);
  };
  std::size_t center = 0;
  for (Elem e = 0; e < group.order(); ++e) center += is_central(e) ? 1 : 0;
  const bool ok = !is_central(group.x()) && !is_central(group.y()) &&
                  is_central(group.mul(group.x(), group.x())) &&
                  is_central(group.mul(group.y(), group.y())) && !is_central(group.z()) &&
                  group.order() / center == (std::size_t{1} << (p.l + 1)) &&
                  element_order(group, group.z()) == (std::uint64_t{1} << p.l);
  if (!ok) {
    throw std::logic_error(p.label() + ": central quotient is not dihedral of order 2^(l+1)");
  }
}

/// Builds the group and, for l >= 2, validates its central quotient.
inline Group make_group(const GroupParams& params) {
  Group group(params);
  if (params.l >= 2) validate_dihedral_central_quotient(group);
  return group;
}

}  // namespace mip

#endif  // MIP_GROUP_HPP_
