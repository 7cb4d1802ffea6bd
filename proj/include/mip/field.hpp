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

#ifndef MIP_FIELD_HPP_
#define MIP_FIELD_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mip {

/// One coefficient of GF(2^k), k <= 8, in the polynomial basis: bit i is the
/// coefficient of g^i where g is a root of the reduction polynomial.
using Coeff = std::uint8_t;

/// Reduction polynomials, indexed by degree. All of them are primitive, so g
/// generates the multiplicative group and log/exp tables are well defined.
///
///   k=1  x          (GF(2) itself)
///   k=2  x^2+x+1
///   k=3  x^3+x+1
///   k=4  x^4+x+1
///   k=5  x^5+x^2+1
///   k=6  x^6+x+1
///   k=7  x^7+x+1
///   k=8  x^8+x^4+x^3+x^2+1
inline constexpr std::array<std::uint16_t, 9> kReductionPolynomials = {
    0x0, 0x2, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D};

/// Exact arithmetic in GF(2^k). Immutable after construction and cheap to
/// copy around by const reference.
class FieldSpec {
 public:
  explicit FieldSpec(int degree = 1) : degree_(degree) {
    if (degree < 1 || degree > 8) {
      throw std::invalid_argument("field degree must be in 1..8, got " +
                                  std::to_string(degree));
    }
    size_ = 1u << degree;
    const std::uint16_t poly = kReductionPolynomials[degree];
    // Build exp/log over the primitive element g (or 1 for GF(2)).
    std::uint16_t e = 1;
    for (unsigned i = 0; i + 1 < size_; ++i) {
      exp_[i] = static_cast<Coeff>(e);
      exp_[i + size_ - 1] = static_cast<Coeff>(e);
      log_[e] = static_cast<std::uint8_t>(i);
      if (degree == 1) break;
      e = static_cast<std::uint16_t>(e << 1);
      if (e & size_) e ^= poly;
    }
    if (degree == 1) {
      exp_[1] = 1;
    }
  }

  int degree() const { return degree_; }
  unsigned size() const { return size_; }
  std::uint16_t reduction_polynomial() const {
    return kReductionPolynomials[degree_];
  }

  static constexpr Coeff add(Coeff a, Coeff b) { return a ^ b; }

  Coeff mul(Coeff a, Coeff b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(2^k)");
    if (size_ == 2) return 1;
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  }

  Coeff frobenius(Coeff a) const { return mul(a, a); }

  /// a^(2^e), iterated Frobenius.
  Coeff frobenius_power(Coeff a, int e) const {
    for (int i = 0; i < e; ++i) a = mul(a, a);
    return a;
  }

  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff result = 1;
    while (e != 0) {
      if (e & 1u) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Generator g of the multiplicative group (1 in GF(2)).
  Coeff generator() const { return degree_ == 1 ? 1 : 2; }

  bool operator==(const FieldSpec& other) const {
    return degree_ == other.degree_;
  }

 private:
  int degree_;
  unsigned size_ = 2;
  std::array<Coeff, 512> exp_{};
  std::array<std::uint8_t, 256> log_{};
};

}  // namespace mip

#endif  // MIP_FIELD_HPP_
