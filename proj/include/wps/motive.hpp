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

#ifndef WPS_MOTIVE_HPP
#define WPS_MOTIVE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wps/rational.hpp"
#include "wps/wls.hpp"

namespace wps {

/// Polynomial in L with integer coefficients, ascending, no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs);
  static ZPoly constant(const Integer& c);
  /// c * L^k.
  static ZPoly monomial(int k, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Integer operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }
  Integer content() const;
  Integer eval(const Integer& x) const;
  std::string to_string() const;

  ZPoly& operator+=(const ZPoly& rhs);
  ZPoly& operator-=(const ZPoly& rhs);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator-(const ZPoly& a) { return ZPoly() - a; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Primitive gcd in Z[L] with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Exact quotient; throws std::invalid_argument when b does not divide a in Z[L].
ZPoly exact_divide(const ZPoly& a, const ZPoly& b);

/// Element num/den of Q(L), kept reduced: coprime, no common integer
/// content, positive leading denominator coefficient.
class MotiveClass {
 public:
  MotiveClass() : den_(ZPoly::constant(1)) {}
  MotiveClass(long c) : num_(ZPoly::constant(c)), den_(ZPoly::constant(1)) {}  // NOLINT
  explicit MotiveClass(ZPoly num, ZPoly den = ZPoly::constant(1));

  /// The Lefschetz class L^k.
  static MotiveClass L(int k = 1) { return MotiveClass(ZPoly::monomial(k)); }

  const ZPoly& num() const noexcept { return num_; }
  const ZPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == ZPoly::constant(1); }
  /// The numerator; throws std::logic_error unless the class is a polynomial.
  const ZPoly& polynomial() const;
  /// Point count under L -> q; throws MathError at a pole.
  Rational specialize(const Integer& q) const;
  std::string to_string() const;

  MotiveClass& operator+=(const MotiveClass& rhs);
  MotiveClass& operator-=(const MotiveClass& rhs);
  MotiveClass& operator*=(const MotiveClass& rhs);
  /// Throws MathError on division by the zero class.
  MotiveClass& operator/=(const MotiveClass& rhs);
  friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
  friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }
  friend MotiveClass operator*(MotiveClass a, const MotiveClass& b) { return a *= b; }
  friend MotiveClass operator/(MotiveClass a, const MotiveClass& b) { return a /= b; }
  friend MotiveClass operator-(const MotiveClass& a) { return MotiveClass(-a.num_, a.den_); }
  friend bool operator==(const MotiveClass&, const MotiveClass&) = default;

 private:
  ZPoly num_;
  ZPoly den_;
};

/// Power series in t with MotiveClass coefficients, truncated at t^K.
class MotiveSeries {
 public:
  static constexpr int kDefaultOrder = 8;

  explicit MotiveSeries(int order = kDefaultOrder);
  MotiveSeries(int order, std::vector<MotiveClass> coeffs);

  int order() const noexcept { return order_; }
  const MotiveClass& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  MotiveClass& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<MotiveClass>& coeffs() const noexcept { return c_; }

  friend MotiveSeries operator+(const MotiveSeries& a, const MotiveSeries& b);
  friend MotiveSeries operator-(const MotiveSeries& a, const MotiveSeries& b);
  friend MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b);
  /// Multiplicative inverse; requires an invertible constant term.
  MotiveSeries inverse() const;
  friend bool operator==(const MotiveSeries&, const MotiveSeries&) = default;

 private:
  int order_;
  std::vector<MotiveClass> c_;
};

/// {P^n} = 1 + L + ... + L^n; zero for n = -1.
MotiveClass proj_motive(int n);
/// {G_m} = L - 1.
MotiveClass gm();

/// Coprime pairs of monic polynomials of degrees (d1, d2).
MotiveClass poly1_motive(int d1, int d2);

/// Coprime monic pairs of degrees (d1, d2) whose orders at a fixed rational
/// point obey gamma. Closed form; requires 1 <= a <= d1 and 1 <= b <= d2.
MotiveClass poly_cond_motive(const VanishingCondition& gamma, int d1, int d2);
/// The same class through the telescoping recursion.
MotiveClass poly_cond_motive_recursive(const VanishingCondition& gamma, int d1, int d2);

/// Class of minimal series of weights (l0, l1) and height n with a single
/// base point of type gamma. Throws std::invalid_argument unless realizable.
MotiveClass stratum_gamma_motive(int l0, int l1, int n, const VanishingCondition& gamma);

/// Class of minimal weighted linear series of height n.
MotiveClass wmin_motive(const WeightVector& weights, int n);
/// Class of minimal series counted with inertia: sum over d | q - 1 of
/// orders[d] * wmin(weights divisible by d, n).
MotiveClass inertia_wmin_motive(const WeightVector& weights, int n,
                                const std::map<std::uint64_t, std::uint64_t>& orders);

/// sum_n wmin(weights, n) t^n through the rational generating function.
MotiveSeries zeta_series(const WeightVector& weights, int order = MotiveSeries::kDefaultOrder);
/// zeta * 1/((1-t)(1-Lt)) against sum_n {P^(n|lambda|+N)} t^n.
bool ambient_identity_check(const WeightVector& weights, int order = MotiveSeries::kDefaultOrder);

inline Rational specialize(const MotiveClass& m, const Integer& q) { return m.specialize(q); }

}  // namespace wps

#endif  // WPS_MOTIVE_HPP
