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

#ifndef WPS_BINFORM_HPP
#define WPS_BINFORM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wps/ffield.hpp"
#include "wps/fppoly.hpp"

namespace wps {

/// Homogeneous polynomial in (s, t) over F_p. Coefficient i multiplies
/// s^(D-i) t^i, so the affine chart s = 1 reads the coefficients as a
/// polynomial in t and s = 0 is the place at infinity. The zero form has no
/// degree.
class BinaryForm {
 public:
  static BinaryForm zero(const PrimeField& field) { return BinaryForm(field); }
  /// Throws std::invalid_argument unless coeffs.size() == degree + 1. An
  /// all-zero coefficient vector yields the zero form.
  BinaryForm(const PrimeField& field, int degree, std::vector<std::uint32_t> coeffs);
  /// Homogenize an affine polynomial of degree <= `degree`.
  static BinaryForm from_affine(const FpPoly& f, int degree);
  static BinaryForm s(const PrimeField& field) { return BinaryForm(field, 1, {1, 0}); }
  static BinaryForm t(const PrimeField& field) { return BinaryForm(field, 1, {0, 1}); }
  static BinaryForm constant(const PrimeField& field, std::uint32_t c) {
    return BinaryForm(field, 0, {c});
  }

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return !degree_.has_value(); }
  /// Throws MathError for the zero form.
  int degree() const;
  /// Coefficients in the s^(D-i) t^i convention; empty for the zero form.
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  /// f(1, t) as a polynomial in t.
  FpPoly affine() const { return FpPoly(field_, c_); }
  /// Order of vanishing at s = 0.
  int infinity_order() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  explicit BinaryForm(const PrimeField& field) : field_(field) {}

  PrimeField field_;
  std::optional<int> degree_;
  std::vector<std::uint32_t> c_;
};

/// Closed point of P^1 over F_p: the place at infinity or a monic
/// irreducible polynomial in t.
class Place {
 public:
  static Place infinity(const PrimeField& field) { return Place(FpPoly(field)); }
  /// Throws std::invalid_argument unless `poly` is monic and irreducible.
  static Place finite(const FpPoly& poly);

  bool is_infinity() const noexcept { return poly_.is_zero(); }
  /// Residue degree.
  int degree() const noexcept { return is_infinity() ? 1 : poly_.degree(); }
  const FpPoly& poly() const noexcept { return poly_; }
  const PrimeField& field() const noexcept { return poly_.field(); }
  /// The place as a binary form of its residue degree (s for infinity).
  BinaryForm form() const;
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) { return a.poly_ == b.poly_; }
  /// Finite places by degree then coefficients; infinity sorts last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  explicit Place(FpPoly poly) : poly_(std::move(poly)) {}
  FpPoly poly_;
};

struct DivisorTerm {
  Place place;
  int multiplicity;
  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// Effective divisor on P^1 with canonically sorted, distinct places.
class Divisor {
 public:
  Divisor() = default;
  /// Merges repeated places and drops zero multiplicities.
  explicit Divisor(std::vector<DivisorTerm> terms);

  const std::vector<DivisorTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int degree() const noexcept;
  int multiplicity(const Place& x) const noexcept;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::vector<DivisorTerm> terms_;
};

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const BinaryForm& f, std::uint32_t c);
BinaryForm pow(const BinaryForm& f, unsigned e);
Fp evaluate(const BinaryForm& f, std::uint32_t s, std::uint32_t t);

/// Exact quotient f / g; throws std::invalid_argument if g does not divide f.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

/// Homogeneous gcd normalized to a monic affine part. One argument may be
/// zero; both zero throws MathError.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);

/// Order of vanishing at x; throws MathError for the zero form.
int valuation(const BinaryForm& f, const Place& x);

/// Zero divisor of f: f = unit * s^(v_inf) * prod P_i^(m_i).
Divisor factor_divisor(const BinaryForm& f, std::uint64_t seed = 0);

/// prod place^multiplicity as a binary form of degree deg(D).
BinaryForm divisor_form(const Divisor& d, const PrimeField& field);

/// Leading unit u with f = u * divisor_form(factor_divisor(f)).
std::uint32_t leading_unit(const BinaryForm& f);

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

}  // namespace wps

#endif  // WPS_BINFORM_HPP
