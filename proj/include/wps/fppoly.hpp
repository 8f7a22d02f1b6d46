// Copyright 2026 The wpscount Authors
//
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

#ifndef WPS_FPPOLY_HPP
#define WPS_FPPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "wps/ffield.hpp"

namespace wps {

/// Dense univariate polynomial over F_p, coefficients in ascending degree
/// order with no trailing zeros. The zero polynomial has no coefficients.
class FpPoly {
 public:
  explicit FpPoly(const PrimeField& field) : field_(field) {}
  FpPoly(const PrimeField& field, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(const PrimeField& field, std::uint32_t c);
  /// The monomial c * z^k.
  static FpPoly monomial(const PrimeField& field, std::uint32_t c, int k);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t operator[](int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  std::uint32_t eval(std::uint32_t x) const noexcept;
  FpPoly monic() const;
  FpPoly scaled(std::uint32_t s) const;
  FpPoly derivative() const;
  /// i-th Hasse derivative: sum_k binom(k, i) c_k z^(k - i).
  FpPoly hasse_derivative(int i) const;

  FpPoly& operator+=(const FpPoly& rhs);
  FpPoly& operator-=(const FpPoly& rhs);
  FpPoly& operator*=(const FpPoly& rhs);

  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(FpPoly a, const FpPoly& b) { return a *= b; }
  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Degree first, then coefficients from the top down.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

 private:
  void trim() noexcept;

  PrimeField field_;
  std::vector<std::uint32_t> c_;
};

/// Quotient and remainder; throws MathError on a zero divisor.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly pow(const FpPoly& a, unsigned e);
FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& mod);

/// Largest k with place^k | f. f must be nonzero, place nonconstant.
int multiplicity(FpPoly f, const FpPoly& place);

struct PolyFactor {
  FpPoly factor;
  int multiplicity;
};

/// Square-free decomposition of a monic polynomial: pairwise coprime
/// square-free factors g_i with f = prod g_i^{e_i}.
std::vector<PolyFactor> squarefree_decomposition(const FpPoly& f);

/// Full factorization of a nonzero polynomial into monic irreducibles,
/// sorted canonically. The leading unit is dropped. Equal-degree splitting
/// draws from a generator seeded with `seed`.
std::vector<PolyFactor> factor(const FpPoly& f, std::uint64_t seed = 0);

bool is_irreducible(const FpPoly& f);

}  // namespace wps

#endif  // WPS_FPPOLY_HPP
