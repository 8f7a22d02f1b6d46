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

#ifndef WPS_COUNTING_HPP
#define WPS_COUNTING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wps/rational.hpp"
#include "wps/wls.hpp"

namespace wps {

enum class CountMode { kWeighted, kUnweighted, kKodaira };

/// Parses "weighted", "unweighted" or "kodaira"; throws std::invalid_argument.
CountMode parse_count_mode(const std::string& text);
std::string to_string(CountMode mode);

/// An additive Kodaira type together with its vanishing condition for (4,6).
struct KodairaTheta {
  std::string name;
  std::string label;
  VanishingCondition gamma;
};

/// II, III, IV, Ik* (I0* with j other or Ik* with k > 0), I0*j0, I0*j1728,
/// IV*, III*, II*.
const std::vector<KodairaTheta>& kodaira_thetas();
/// Looks a type up by name; "I0*" is accepted for "Ik*". Throws std::invalid_argument.
const KodairaTheta& find_theta(const std::string& name);

struct CountTerm {
  std::string label;
  Rational value;
};

/// A counting function at B = q^(12m), by summation and by closed form.
struct CountResult {
  std::uint64_t q = 0;
  int m = 0;
  CountMode mode = CountMode::kWeighted;
  std::string theta;
  Rational summed;
  /// Absent when m = 0, where the closed forms do not apply.
  std::optional<Rational> closed;
  std::vector<CountTerm> breakdown;

  bool match() const { return closed.has_value() && *closed == summed; }
};

/// N^w, N or N(Theta) for F_q(t) with discriminant height at most q^(12m).
/// q must be a prime power with characteristic above 3.
CountResult count_curves(std::uint64_t q, int m, CountMode mode, const std::string& theta = "");

/// Leading constants of the unweighted count:
/// N = 2a B^(5/6) + 4b B^(1/2) + 2c B^(1/3) - 2 B^(1/6) + d.
struct IntroConstants {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

IntroConstants intro_constants(std::uint64_t q);

}  // namespace wps

#endif  // WPS_COUNTING_HPP
