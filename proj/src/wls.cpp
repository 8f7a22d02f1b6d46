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

#include "wps/wls.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wps/errors.hpp"

namespace wps {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("weight vector must be non-empty");
  for (int w : w_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    kappa_ = std::lcm(kappa_, w);
    total_ += w;
  }
}

std::vector<int> WeightVector::divisible_by(int d) const {
  std::vector<int> out;
  for (int w : w_) {
    if (w % d == 0) out.push_back(w);
  }
  return out;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w_.size(); ++j) os << (j ? "," : "") << w_[j];
  os << ')';
  return os.str();
}

TwistDatum twist_of_multiplicity(int m, int kappa) {
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  if (m >= kappa) {
    throw NonMinimalError("multiplicity " + std::to_string(m) + " is not below kappa " +
                          std::to_string(kappa));
  }
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  const int g = std::gcd(m, kappa);
  return {kappa / g, m / g};
}

int multiplicity_of_twist(TwistDatum twist, int kappa) {
  if (twist.r <= 1 || kappa % twist.r != 0 || twist.a <= 0 || twist.a >= twist.r ||
      std::gcd(twist.a, twist.r) != 1) {
    throw std::invalid_argument("twist datum is not admissible for kappa " +
                                std::to_string(kappa));
  }
  return kappa / twist.r * twist.a;
}

WeightedLinearSeries::WeightedLinearSeries(const PrimeField& field, WeightVector weights, int n,
                                           std::vector<BinaryForm> forms)
    : field_(field), weights_(std::move(weights)), n_(n), forms_(std::move(forms)) {
  if (n_ < 0) throw std::invalid_argument("height must be non-negative");
  if (forms_.size() != weights_.size()) {
    throw std::invalid_argument("expected " + std::to_string(weights_.size()) + " forms, got " +
                                std::to_string(forms_.size()));
  }
  bool any = false;
  for (std::size_t j = 0; j < forms_.size(); ++j) {
    const BinaryForm& f = forms_[j];
    if (!(f.field() == field_)) throw std::invalid_argument("form over a different field");
    if (f.is_zero()) continue;
    any = true;
    if (f.degree() != weights_[j] * n_) {
      throw std::invalid_argument("form " + std::to_string(j) + " has degree " +
                                  std::to_string(f.degree()) + ", expected " +
                                  std::to_string(weights_[j] * n_));
    }
  }
  if (!any) throw std::invalid_argument("all forms are zero");
}

Divisor normalized_base_divisor(const WeightedLinearSeries& w, std::uint64_t seed) {
  const PrimeField& F = w.field();
  BinaryForm plain = BinaryForm::zero(F);
  for (const BinaryForm& f : w.forms()) {
    if (!f.is_zero()) plain = plain.is_zero() ? f : gcd(plain, f);
  }
  if (plain.degree() == 0) return Divisor();

  BinaryForm g = BinaryForm::zero(F);
  for (std::size_t j = 0; j < w.forms().size(); ++j) {
    const BinaryForm& f = w.form(j);
    if (f.is_zero()) continue;
    const BinaryForm power = pow(f, static_cast<unsigned>(w.weights().cofactor(j)));
    g = g.is_zero() ? power : gcd(g, power);
  }
  return factor_divisor(g, seed);
}

int minimality_defect(const WeightedLinearSeries& w) {
  const int kappa = w.weights().kappa();
  int e = 0;
  const Divisor base = normalized_base_divisor(w);
  for (const DivisorTerm& term : base.terms()) {
    e += term.multiplicity / kappa * term.place.degree();
  }
  return e;
}

bool is_minimal(const WeightedLinearSeries& w) { return minimality_defect(w) == 0; }

Minimalization minimalize(const WeightedLinearSeries& w) {
  const PrimeField& F = w.field();
  const int kappa = w.weights().kappa();
  std::vector<DivisorTerm> quotient;
  const Divisor base = normalized_base_divisor(w);
  for (const DivisorTerm& term : base.terms()) {
    if (term.multiplicity >= kappa) quotient.push_back({term.place, term.multiplicity / kappa});
  }
  const Divisor dprime(std::move(quotient));
  const BinaryForm h = divisor_form(dprime, F);
  const int e = dprime.degree();
  if (e == 0) return {w, h, 0};

  std::vector<BinaryForm> forms;
  forms.reserve(w.forms().size());
  for (std::size_t j = 0; j < w.forms().size(); ++j) {
    const BinaryForm& f = w.form(j);
    forms.push_back(f.is_zero() ? f
                                : exact_divide(f, pow(h, static_cast<unsigned>(w.weights()[j]))));
  }
  return {WeightedLinearSeries(F, w.weights(), w.height() - e, std::move(forms)), h, e};
}

WeightedLinearSeries unminimalize(const WeightedLinearSeries& w, const BinaryForm& h) {
  if (h.is_zero()) throw std::invalid_argument("unminimalize by the zero form");
  std::vector<BinaryForm> forms;
  forms.reserve(w.forms().size());
  for (std::size_t j = 0; j < w.forms().size(); ++j) {
    forms.push_back(w.form(j) * pow(h, static_cast<unsigned>(w.weights()[j])));
  }
  return WeightedLinearSeries(w.field(), w.weights(), w.height() + h.degree(), std::move(forms));
}

std::vector<TwistDatum> HeightReport::gamma() const {
  std::vector<TwistDatum> out;
  for (const LocalDatum& x : locals) {
    out.insert(out.end(), static_cast<std::size_t>(x.place.degree()), x.twist);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HeightReport height_report(const WeightedLinearSeries& w, bool require_minimal) {
  const int kappa = w.weights().kappa();
  const Divisor base = normalized_base_divisor(w);
  std::vector<std::string> bad;
  for (const DivisorTerm& term : base.terms()) {
    if (term.multiplicity >= kappa) bad.push_back(term.place.to_string());
  }
  if (!bad.empty()) {
    if (require_minimal) {
      std::string msg = "series is not minimal at";
      for (const std::string& b : bad) msg += " " + b;
      throw NonMinimalError(msg);
    }
    return height_report(minimalize(w).minimal, true);
  }

  HeightReport report;
  report.ht = w.height();
  Rational total = 0;
  for (const DivisorTerm& term : base.terms()) {
    const TwistDatum twist = twist_of_multiplicity(term.multiplicity, kappa);
    Rational delta(twist.a * term.place.degree(), twist.r);
    delta.canonicalize();
    total += delta;
    report.locals.push_back({term.place, term.multiplicity, twist, delta});
  }
  report.ht_stable = Rational(w.height()) - total;
  report.isotrivial = report.ht_stable == 0;
  return report;
}

WeightedLinearSeries scaled(const WeightedLinearSeries& w, std::uint32_t u) {
  const PrimeField& F = w.field();
  if (u % F.p() == 0) throw std::invalid_argument("scaling by zero");
  std::vector<BinaryForm> forms;
  forms.reserve(w.forms().size());
  for (std::size_t j = 0; j < w.forms().size(); ++j) {
    forms.push_back(scale(w.form(j), F.pow(u % F.p(), static_cast<std::uint64_t>(w.weights()[j]))));
  }
  return WeightedLinearSeries(F, w.weights(), w.height(), std::move(forms));
}

bool equivalent(const WeightedLinearSeries& w1, const WeightedLinearSeries& w2) {
  if (!(w1.weights() == w2.weights()) || w1.height() != w2.height() ||
      !(w1.field() == w2.field())) {
    throw std::invalid_argument("equivalent: series differ in field, weights or height");
  }
  for (std::uint32_t u = 1; u < w1.field().p(); ++u) {
    if (scaled(w1, u) == w2) return true;
  }
  return false;
}

namespace {

std::vector<std::vector<std::uint32_t>> coefficient_key(const WeightedLinearSeries& w) {
  std::vector<std::vector<std::uint32_t>> key;
  key.reserve(w.forms().size());
  for (const BinaryForm& f : w.forms()) key.push_back(f.coeffs());
  return key;
}

}  // namespace

WeightedLinearSeries canonical_representative(const WeightedLinearSeries& w) {
  WeightedLinearSeries best = w;
  auto best_key = coefficient_key(w);
  for (std::uint32_t u = 2; u < w.field().p(); ++u) {
    WeightedLinearSeries cand = scaled(w, u);
    auto key = coefficient_key(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

VanishingCondition VanishingCondition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s.push_back(c);
  }
  const auto fail = [&]() {
    return std::invalid_argument("cannot parse vanishing condition '" + std::string(text) + "'");
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) throw fail();
  const auto entry = [&](std::string part, bool& at_least) {
    at_least = false;
    if (part.rfind(">=", 0) == 0) {
      at_least = true;
      part.erase(0, 2);
    } else if (part.rfind("\xE2\x89\xA5", 0) == 0) {
      at_least = true;
      part.erase(0, 3);
    }
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 6) {
      throw fail();
    }
    return std::stoi(part);
  };
  bool ge0 = false;
  bool ge1 = false;
  VanishingCondition out;
  out.a = entry(s.substr(0, comma), ge0);
  out.b = entry(s.substr(comma + 1), ge1);
  if (ge0 && ge1) throw fail();
  out.shape = ge0 ? Shape::kAtLeastFirst : ge1 ? Shape::kAtLeastSecond : Shape::kExact;
  return out;
}

std::string VanishingCondition::to_string() const {
  std::string first = (shape == Shape::kAtLeastFirst ? ">=" : "") + std::to_string(a);
  std::string second = (shape == Shape::kAtLeastSecond ? ">=" : "") + std::to_string(b);
  return "(" + first + "," + second + ")";
}

bool VanishingCondition::admits(int nu0, int nu1) const noexcept {
  const bool inf0 = nu0 < 0;
  const bool inf1 = nu1 < 0;
  switch (shape) {
    case Shape::kAtLeastFirst:
      return (inf0 || nu0 >= a) && !inf1 && nu1 == b;
    case Shape::kAtLeastSecond:
      return !inf0 && nu0 == a && (inf1 || nu1 >= b);
    case Shape::kExact:
      break;
  }
  return !inf0 && !inf1 && nu0 == a && nu1 == b;
}

int forced_multiplicity(const VanishingCondition& gamma, const WeightVector& weights) {
  if (weights.size() != 2) throw std::invalid_argument("vanishing conditions need two weights");
  const int m0 = weights.cofactor(0) * gamma.a;
  const int m1 = weights.cofactor(1) * gamma.b;
  switch (gamma.shape) {
    case VanishingCondition::Shape::kAtLeastFirst:
      return m1;
    case VanishingCondition::Shape::kAtLeastSecond:
      return m0;
    case VanishingCondition::Shape::kExact:
      break;
  }
  return std::min(m0, m1);
}

bool is_realizable(const VanishingCondition& gamma, const WeightVector& weights, int n) {
  if (weights.size() != 2) return false;
  if (gamma.a < 1 || gamma.b < 1) return false;
  if (gamma.a > weights[0] * n || gamma.b > weights[1] * n) return false;
  const int kappa = weights.kappa();
  const int m0 = weights.cofactor(0) * gamma.a;
  const int m1 = weights.cofactor(1) * gamma.b;
  switch (gamma.shape) {
    case VanishingCondition::Shape::kAtLeastFirst:
      return m1 < kappa && m1 <= m0;
    case VanishingCondition::Shape::kAtLeastSecond:
      return m0 < kappa && m0 <= m1;
    case VanishingCondition::Shape::kExact:
      break;
  }
  return std::min(m0, m1) < kappa;
}

std::vector<VanishingCondition> realizable_conditions(const WeightVector& weights, int n) {
  std::vector<VanishingCondition> out;
  if (weights.size() != 2) return out;
  for (auto shape : {VanishingCondition::Shape::kAtLeastFirst, VanishingCondition::Shape::kAtLeastSecond,
                     VanishingCondition::Shape::kExact}) {
    for (int a = 1; a <= weights[0] * n; ++a) {
      for (int b = 1; b <= weights[1] * n; ++b) {
        const VanishingCondition g{shape, a, b};
        if (is_realizable(g, weights, n)) out.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace wps
