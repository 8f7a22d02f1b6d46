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

#ifndef WPS_WLS_HPP
#define WPS_WLS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wps/binform.hpp"
#include "wps/rational.hpp"

namespace wps {

/// Positive weights (lambda_0, ..., lambda_N) with kappa = lcm and
/// cofactors kappa / lambda_j.
class WeightVector {
 public:
  explicit WeightVector(std::vector<int> weights);

  std::size_t size() const noexcept { return w_.size(); }
  /// N, the dimension of the weighted projective stack.
  int dimension() const noexcept { return static_cast<int>(w_.size()) - 1; }
  int operator[](std::size_t j) const { return w_.at(j); }
  const std::vector<int>& weights() const noexcept { return w_; }
  int kappa() const noexcept { return kappa_; }
  int cofactor(std::size_t j) const { return kappa_ / w_.at(j); }
  int total() const noexcept { return total_; }
  /// Weights divisible by d, in order; may be empty.
  std::vector<int> divisible_by(int d) const;
  std::string to_string() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

 private:
  std::vector<int> w_;
  int kappa_ = 1;
  int total_ = 0;
};

/// Local condition (r, a): stabilizer order and character exponent. The
/// identity datum is (1, 0).
struct TwistDatum {
  int r = 1;
  int a = 0;
  bool is_identity() const noexcept { return r == 1; }
  friend auto operator<=>(const TwistDatum&, const TwistDatum&) = default;
};

/// (r, a) = (kappa / g, m / g) with g = gcd(m, kappa). Requires 0 < m < kappa;
/// m >= kappa throws NonMinimalError.
TwistDatum twist_of_multiplicity(int m, int kappa);
/// Inverse: m = kappa * a / r. Requires r | kappa, gcd(a, r) = 1, 0 < a < r.
int multiplicity_of_twist(TwistDatum twist, int kappa);

/// A tuple of binary forms f_j of degree lambda_j * n (or zero), not all zero.
class WeightedLinearSeries {
 public:
  WeightedLinearSeries(const PrimeField& field, WeightVector weights, int n,
                       std::vector<BinaryForm> forms);

  const PrimeField& field() const noexcept { return field_; }
  const WeightVector& weights() const noexcept { return weights_; }
  int height() const noexcept { return n_; }
  const std::vector<BinaryForm>& forms() const noexcept { return forms_; }
  const BinaryForm& form(std::size_t j) const { return forms_.at(j); }

  friend bool operator==(const WeightedLinearSeries&, const WeightedLinearSeries&) = default;

 private:
  PrimeField field_;
  WeightVector weights_;
  int n_;
  std::vector<BinaryForm> forms_;
};

/// Base divisor of the normalized series (f_j^(kappa / lambda_j)); its
/// multiplicity at x is min_j cofactor_j * v_x(f_j).
Divisor normalized_base_divisor(const WeightedLinearSeries& w, std::uint64_t seed = 0);

/// sum_x floor(m_x / kappa) * deg(x); zero exactly for minimal series.
int minimality_defect(const WeightedLinearSeries& w);
bool is_minimal(const WeightedLinearSeries& w);

struct Minimalization {
  WeightedLinearSeries minimal;
  /// f_j = f'_j * h^lambda_j, deg h = defect.
  BinaryForm h;
  int defect;
};

Minimalization minimalize(const WeightedLinearSeries& w);
/// (f_j * h^lambda_j) at height n + deg h.
WeightedLinearSeries unminimalize(const WeightedLinearSeries& w, const BinaryForm& h);

struct LocalDatum {
  Place place;
  int m;
  TwistDatum twist;
  Rational delta;
};

struct HeightReport {
  int ht = 0;
  Rational ht_stable;
  std::vector<LocalDatum> locals;
  bool isotrivial = false;

  /// The twists of all locals, sorted; each place of degree d contributes d
  /// geometric copies.
  std::vector<TwistDatum> gamma() const;
};

/// Stacky height, stable height and local contributions. A non-minimal
/// series is minimalized first unless `require_minimal`, in which case a
/// NonMinimalError names the offending places.
HeightReport height_report(const WeightedLinearSeries& w, bool require_minimal = false);

/// (u^lambda_j * f_j).
WeightedLinearSeries scaled(const WeightedLinearSeries& w, std::uint32_t u);
/// True iff some unit u carries w1 to w2. Requires equal weights and height.
bool equivalent(const WeightedLinearSeries& w1, const WeightedLinearSeries& w2);
/// Lexicographically least coefficient tuple over all unit scalings.
WeightedLinearSeries canonical_representative(const WeightedLinearSeries& w);

/// Vanishing condition at a single point for a pair of forms: (>=a, b),
/// (a, >=b) or (a, b).
struct VanishingCondition {
  enum class Shape { kAtLeastFirst, kAtLeastSecond, kExact };
  Shape shape = Shape::kExact;
  int a = 1;
  int b = 1;

  /// Accepts "(>=1,1)", ">=1,1", "2,>=4", "(2,3)". Throws std::invalid_argument.
  static VanishingCondition parse(std::string_view text);
  std::string to_string() const;
  /// Whether orders of vanishing (nu0, nu1) satisfy the condition; a
  /// negative order stands for a zero form.
  bool admits(int nu0, int nu1) const noexcept;

  friend bool operator==(const VanishingCondition&, const VanishingCondition&) = default;
};

/// The normalized multiplicity forced by gamma at the point, when gamma
/// pins it down (see is_realizable).
int forced_multiplicity(const VanishingCondition& gamma, const WeightVector& weights);

/// Two weights, a, b >= 1 within degrees, the exact entries realize the
/// minimum of cofactor * order, and that minimum is below kappa.
bool is_realizable(const VanishingCondition& gamma, const WeightVector& weights, int n);

/// Every realizable condition for two weights at height n, by shape then (a, b).
std::vector<VanishingCondition> realizable_conditions(const WeightVector& weights, int n);

}  // namespace wps

#endif  // WPS_WLS_HPP
