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

#ifndef WPS_TATE_HPP
#define WPS_TATE_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wps/binform.hpp"
#include "wps/wls.hpp"

namespace wps {

/// Order of vanishing of the zero form.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// y^2 = x^3 + a4 x + a6 with a4, a6 of degrees 4n, 6n (either may be zero).
class WeierstrassModel {
 public:
  WeierstrassModel(BinaryForm a4, BinaryForm a6, int n);
  explicit WeierstrassModel(const WeightedLinearSeries& w);

  const BinaryForm& a4() const noexcept { return a4_; }
  const BinaryForm& a6() const noexcept { return a6_; }
  int height() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return a4_.field(); }
  WeightedLinearSeries series() const;

 private:
  BinaryForm a4_;
  BinaryForm a6_;
  int n_;
};

enum class Kodaira { kI0, kIn, kII, kIII, kIV, kI0Star, kInStar, kIVStar, kIIIStar, kIIStar };

struct KodairaType {
  Kodaira kind = Kodaira::kI0;
  /// Index of I_k and I_k*; zero otherwise.
  int k = 0;

  bool additive() const noexcept { return kind != Kodaira::kI0 && kind != Kodaira::kIn; }
  /// "I0", "I3", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*".
  std::string to_string() const;
  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

enum class JClass { kZero, k1728, kInfinity, kOther };
std::string to_string(JClass j);

struct FiberReport {
  Place place;
  int nu_a4;
  int nu_a6;
  int nu_delta;
  JClass j;
  KodairaType kodaira;
  std::optional<TwistDatum> twist;
};

struct DiscriminantJ {
  BinaryForm delta;
  BinaryForm j_num;
  BinaryForm j_den;
};

/// Delta = -16 (4 a4^3 + 27 a6^2), j = 6912 a4^3 / (4 a4^3 + 27 a6^2).
/// Throws SingularModelError when Delta vanishes identically.
DiscriminantJ discriminant_j(const WeierstrassModel& model);

/// Kodaira type at x. Throws NonMinimalError when min(3 v(a4), 2 v(a6)) >= 12.
FiberReport classify_place(const WeierstrassModel& model, const Place& x);

struct Classification {
  /// One report per place dividing Delta, in canonical place order.
  std::vector<FiberReport> fibers;
  /// Sorted twists of the additive fibers, deg(x) copies each.
  std::vector<TwistDatum> gamma;
  /// sum v_x(Delta) deg(x), always 12n.
  int delta_degree = 0;
};

/// Classifies every bad fiber; throws NonMinimalError unless the model is minimal.
Classification classify_all(const WeierstrassModel& model, std::uint64_t seed = 0);

}  // namespace wps

#endif  // WPS_TATE_HPP
