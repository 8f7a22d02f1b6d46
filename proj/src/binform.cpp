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

#include "wps/binform.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wps/errors.hpp"

namespace wps {

BinaryForm::BinaryForm(const PrimeField& field, int degree, std::vector<std::uint32_t> coeffs)
    : field_(field) {
  if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("binary form of degree " + std::to_string(degree) + " needs " +
                                std::to_string(degree + 1) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  for (auto& x : coeffs) x %= field.p();
  if (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t x) { return x == 0; })) return;
  degree_ = degree;
  c_ = std::move(coeffs);
}

BinaryForm BinaryForm::from_affine(const FpPoly& f, int degree) {
  if (f.degree() > degree) {
    throw std::invalid_argument("cannot homogenize a polynomial of degree " +
                                std::to_string(f.degree()) + " to degree " + std::to_string(degree));
  }
  std::vector<std::uint32_t> v(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) v[i] = f[i];
  return BinaryForm(f.field(), degree, std::move(v));
}

int BinaryForm::degree() const {
  if (!degree_) throw MathError("the zero form has no degree");
  return *degree_;
}

int BinaryForm::infinity_order() const {
  if (!degree_) throw MathError("valuation of the zero form is infinite");
  int top = *degree_;
  while (c_[top] == 0) --top;
  return *degree_ - top;
}

Place Place::finite(const FpPoly& poly) {
  if (poly.leading() != 1 || !is_irreducible(poly)) {
    throw std::invalid_argument("place polynomial must be monic and irreducible");
  }
  return Place(poly);
}

BinaryForm Place::form() const {
  if (is_infinity()) return BinaryForm::s(field());
  return BinaryForm::from_affine(poly_, poly_.degree());
}

std::string Place::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream os;
  os << form();
  return os.str();
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
  return a.poly_ < b.poly_;
}

Divisor::Divisor(std::vector<DivisorTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const DivisorTerm& a, const DivisorTerm& b) { return a.place < b.place; });
  for (auto& term : terms) {
    if (term.multiplicity < 0) throw std::invalid_argument("divisor multiplicities must be >= 0");
    if (term.multiplicity == 0) continue;
    if (!terms_.empty() && terms_.back().place == term.place) {
      terms_.back().multiplicity += term.multiplicity;
    } else {
      terms_.push_back(std::move(term));
    }
  }
}

int Divisor::degree() const noexcept {
  int d = 0;
  for (const auto& t : terms_) d += t.multiplicity * t.place.degree();
  return d;
}

int Divisor::multiplicity(const Place& x) const noexcept {
  for (const auto& t : terms_) {
    if (t.place == x) return t.multiplicity;
  }
  return 0;
}

namespace {
void check_field(const BinaryForm& f, const BinaryForm& g) {
  if (!(f.field() == g.field())) throw std::invalid_argument("binary forms over different fields");
}
}  // namespace

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  check_field(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("cannot add binary forms of degrees " + std::to_string(f.degree()) +
                                " and " + std::to_string(g.degree()));
  }
  const PrimeField& F = f.field();
  std::vector<std::uint32_t> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(f.coeffs()[i], g.coeffs()[i]);
  return BinaryForm(F, f.degree(), std::move(v));
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
  return f + scale(g, g.field().p() - 1);
}

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  check_field(f, g);
  if (f.is_zero() || g.is_zero()) return BinaryForm::zero(f.field());
  const FpPoly prod = f.affine() * g.affine();
  return BinaryForm::from_affine(prod, f.degree() + g.degree());
}

BinaryForm scale(const BinaryForm& f, std::uint32_t c) {
  if (f.is_zero()) return f;
  const PrimeField& F = f.field();
  std::vector<std::uint32_t> v = f.coeffs();
  for (auto& x : v) x = F.mul(x, c % F.p());
  return BinaryForm(F, f.degree(), std::move(v));
}

BinaryForm pow(const BinaryForm& f, unsigned e) {
  if (f.is_zero()) {
    return e == 0 ? BinaryForm::constant(f.field(), 1) : f;
  }
  return BinaryForm::from_affine(pow(f.affine(), e), f.degree() * static_cast<int>(e));
}

Fp evaluate(const BinaryForm& f, std::uint32_t s, std::uint32_t t) {
  const PrimeField& F = f.field();
  if (f.is_zero()) return Fp(F, 0);
  std::uint32_t acc = 0;
  const int D = f.degree();
  for (int i = 0; i <= D; ++i) {
    const std::uint32_t term = F.mul(F.mul(f.coeffs()[i], F.pow(s % F.p(), D - i)), F.pow(t % F.p(), i));
    acc = F.add(acc, term);
  }
  return Fp(F, acc);
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
  check_field(f, g);
  if (g.is_zero()) throw MathError("division by the zero form");
  if (f.is_zero()) return f;
  if (g.degree() > f.degree() || g.infinity_order() > f.infinity_order()) {
    throw std::invalid_argument("exact_divide: divisor does not divide dividend");
  }
  auto [q, r] = divmod(f.affine(), g.affine());
  if (!r.is_zero()) throw std::invalid_argument("exact_divide: divisor does not divide dividend");
  return BinaryForm::from_affine(q, f.degree() - g.degree());
}

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
  check_field(f, g);
  const PrimeField& F = f.field();
  if (f.is_zero() && g.is_zero()) throw MathError("gcd of two zero forms is undefined");
  if (f.is_zero() || g.is_zero()) {
    const BinaryForm& h = f.is_zero() ? g : f;
    return scale(h, F.inv(h.affine().leading()));
  }
  const FpPoly aff = gcd(f.affine(), g.affine());
  const int inf = std::min(f.infinity_order(), g.infinity_order());
  return BinaryForm::from_affine(aff, aff.degree() + inf);
}

int valuation(const BinaryForm& f, const Place& x) {
  if (f.is_zero()) throw MathError("valuation of the zero form is infinite");
  if (!(f.field() == x.field())) throw std::invalid_argument("place and form over different fields");
  if (x.is_infinity()) return f.infinity_order();
  return multiplicity(f.affine(), x.poly());
}

Divisor factor_divisor(const BinaryForm& f, std::uint64_t seed) {
  if (f.is_zero()) throw MathError("cannot factor the zero form");
  std::vector<DivisorTerm> terms;
  const int inf = f.infinity_order();
  if (inf > 0) terms.push_back({Place::infinity(f.field()), inf});
  const FpPoly aff = f.affine();
  if (aff.degree() > 0) {
    for (auto& [q, e] : factor(aff, seed)) terms.push_back({Place::finite(q), e});
  }
  return Divisor(std::move(terms));
}

BinaryForm divisor_form(const Divisor& d, const PrimeField& field) {
  BinaryForm out = BinaryForm::constant(field, 1);
  for (const auto& term : d.terms()) {
    out = out * pow(term.place.form(), static_cast<unsigned>(term.multiplicity));
  }
  return out;
}

std::uint32_t leading_unit(const BinaryForm& f) {
  if (f.is_zero()) throw MathError("the zero form has no leading unit");
  return f.affine().leading();
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
  if (f.is_zero()) return os << "0";
  const int D = f.degree();
  bool first = true;
  for (int i = D; i >= 0; --i) {
    const std::uint32_t c = f.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const int ds = D - i;
    bool need_star = false;
    if (c != 1 || (ds == 0 && i == 0)) {
      os << c;
      need_star = true;
    }
    if (ds > 0) {
      os << (need_star ? "*" : "") << "s";
      if (ds > 1) os << "^" << ds;
      need_star = true;
    }
    if (i > 0) {
      os << (need_star ? "*" : "") << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

}  // namespace wps
