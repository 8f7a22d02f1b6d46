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

#include "wps/counting.hpp"

#include <stdexcept>

#include "wps/ffield.hpp"
#include "wps/motive.hpp"

namespace wps {

namespace {

void check_q(std::uint64_t q) {
  if (q <= 3) throw std::invalid_argument("q must exceed 3");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t r = q;
  while (r % p == 0) r /= p;
  if (r != 1 || p <= 3) {
    throw std::invalid_argument("q must be a power of a prime above 3, got " + std::to_string(q));
  }
}

Rational power(std::uint64_t q, int e) { return Rational(ipow(Integer(static_cast<unsigned long>(q)), static_cast<unsigned long>(e))); }

Rational sum_wmin(const WeightVector& w, int m, const Integer& q) {
  Rational s = 0;
  for (int n = 0; n <= m; ++n) s += wmin_motive(w, n).specialize(q);
  return s;
}

}  // namespace

CountMode parse_count_mode(const std::string& text) {
  if (text == "weighted") return CountMode::kWeighted;
  if (text == "unweighted") return CountMode::kUnweighted;
  if (text == "kodaira") return CountMode::kKodaira;
  throw std::invalid_argument("unknown count mode '" + text + "'");
}

std::string to_string(CountMode mode) {
  switch (mode) {
    case CountMode::kWeighted: return "weighted";
    case CountMode::kUnweighted: return "unweighted";
    case CountMode::kKodaira: return "kodaira";
  }
  return "?";
}

const std::vector<KodairaTheta>& kodaira_thetas() {
  static const std::vector<KodairaTheta> thetas = {
      {"II", "II with j=0", VanishingCondition::parse(">=1,1")},
      {"III", "III with j=1728", VanishingCondition::parse("1,>=2")},
      {"IV", "IV with j=0", VanishingCondition::parse(">=2,2")},
      {"Ik*", "I0* with j other or Ik* with j=inf", VanishingCondition::parse("2,3")},
      {"I0*j0", "I0* with j=0", VanishingCondition::parse(">=3,3")},
      {"I0*j1728", "I0* with j=1728", VanishingCondition::parse("2,>=4")},
      {"IV*", "IV* with j=0", VanishingCondition::parse(">=3,4")},
      {"III*", "III* with j=1728", VanishingCondition::parse("3,>=5")},
      {"II*", "II* with j=0", VanishingCondition::parse(">=4,5")},
  };
  return thetas;
}

const KodairaTheta& find_theta(const std::string& name) {
  const std::string key = name == "I0*" ? "Ik*" : name;
  for (const KodairaTheta& t : kodaira_thetas()) {
    if (t.name == key) return t;
  }
  throw std::invalid_argument("unknown Kodaira type '" + name + "'");
}

CountResult count_curves(std::uint64_t q, int m, CountMode mode, const std::string& theta) {
  check_q(q);
  if (m < 0) throw std::invalid_argument("B exponent must be non-negative");
  const Integer Q(static_cast<unsigned long>(q));
  CountResult out;
  out.q = q;
  out.m = m;
  out.mode = mode;
  const bool closed_ok = m >= 1;
  const IntroConstants k = intro_constants(q);

  switch (mode) {
    case CountMode::kWeighted: {
      const Rational main = sum_wmin(WeightVector({4, 6}), m, Q);
      const Rational sing = sum_wmin(WeightVector({2}), m, Q);
      out.breakdown = {{"sum W(4,6)", main}, {"-sum W(2)", -sing}};
      out.summed = main - sing;
      if (closed_ok) out.closed = k.a * power(q, 10 * m) - power(q, 2 * m);
      break;
    }
    case CountMode::kUnweighted: {
      const auto orders = units_by_order(q);
      Rational main = 0;
      for (int n = 0; n <= m; ++n) main += inertia_wmin_motive(WeightVector({4, 6}), n, orders).specialize(Q);
      const Rational sing = 2 * sum_wmin(WeightVector({2}), m, Q);
      const int d6 = delta_divides(6, q);
      const int d4 = delta_divides(4, q);
      out.breakdown = {{"2*sum W(4,6)", 2 * sum_wmin(WeightVector({4, 6}), m, Q)},
                       {"4*delta(6)*sum W(6)", Rational(4 * d6) * sum_wmin(WeightVector({6}), m, Q)},
                       {"2*delta(4)*sum W(4)", Rational(2 * d4) * sum_wmin(WeightVector({4}), m, Q)},
                       {"-2*sum W(2)", -sing}};
      out.summed = main - sing;
      if (closed_ok) {
        out.closed = 2 * k.a * power(q, 10 * m) + 4 * k.b * power(q, 6 * m) +
                     2 * k.c * power(q, 4 * m) - 2 * power(q, 2 * m) + k.d;
      }
      break;
    }
    case CountMode::kKodaira: {
      const KodairaTheta& t = find_theta(theta);
      out.theta = t.name;
      out.summed = 0;
      for (int n = 1; n <= m; ++n) {
        const Rational term = 2 * stratum_gamma_motive(4, 6, n, t.gamma).specialize(Q);
        out.breakdown.push_back({"n=" + std::to_string(n), term});
        out.summed += term;
      }
      if (closed_ok) {
        const int ab = t.gamma.a + t.gamma.b;
        const Rational e = t.gamma.shape == VanishingCondition::Shape::kExact
                               ? (Rational(Q) - 1) * power(q, 9 - ab)
                               : power(q, 10 - ab);
        out.closed = 2 * (power(q, 2) - 1) / (power(q, 10) - 1) * e * (power(q, 10 * m) - 1);
      }
      break;
    }
  }
  return out;
}

IntroConstants intro_constants(std::uint64_t q) {
  check_q(q);
  const int d6 = delta_divides(6, q);
  const int d4 = delta_divides(4, q);
  IntroConstants k;
  k.a = (power(q, 9) - 1) / (power(q, 8) - power(q, 7));
  k.b = d6 * (power(q, 5) - 1) / (power(q, 5) - power(q, 4));
  k.c = d4 * (power(q, 3) - 1) / (power(q, 3) - power(q, 2));
  k.d = 4 * d6 + 2 * d4;
  return k;
}

}  // namespace wps
