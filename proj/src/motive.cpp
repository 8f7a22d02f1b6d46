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

#include "wps/motive.hpp"

#include <sstream>
#include <stdexcept>

#include "wps/errors.hpp"

namespace wps {

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const Integer& c) { return ZPoly(std::vector<Integer>{c}); }

ZPoly ZPoly::monomial(int k, const Integer& c) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<Integer> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const Integer& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Integer ZPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0 && mag != 1) os << '*';
    if (i == 1) os << 'L';
    if (i > 1) os << "L^" << i;
  }
  return os.str();
}

ZPoly& ZPoly::operator+=(const ZPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ZPoly(std::move(v));
}

namespace {

ZPoly divide_content(const ZPoly& p, const Integer& c) {
  std::vector<Integer> v = p.coeffs();
  for (Integer& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return ZPoly(std::move(v));
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading() < 0) c = -c;
  return divide_content(p, c);
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const Integer lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const ZPoly shift = ZPoly::monomial(a.degree() - b.degree(), a.leading());
    a = ZPoly::constant(lb) * a - shift * b;
  }
  return a;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  ZPoly r = a;
  std::vector<Integer> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::invalid_argument("polynomial division is not exact over Z");
    }
    const int k = r.degree() - b.degree();
    const Integer c = r.leading() / b.leading();
    q[k] = c;
    r -= ZPoly::monomial(k, c) * b;
  }
  if (!r.is_zero()) throw std::invalid_argument("polynomial division leaves a remainder");
  return ZPoly(std::move(q));
}

MotiveClass::MotiveClass(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("division by the zero class");
  if (num_.is_zero()) {
    den_ = ZPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  Integer c;
  const Integer cn = num_.content();
  const Integer cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = divide_content(num_, c);
    den_ = divide_content(den_, c);
  }
}

const ZPoly& MotiveClass::polynomial() const {
  if (!is_polynomial()) throw std::logic_error("class " + to_string() + " is not a polynomial in L");
  return num_;
}

Rational MotiveClass::specialize(const Integer& q) const {
  const Integer d = den_.eval(q);
  if (d == 0) throw MathError("class " + to_string() + " has a pole at L = " + q.get_str());
  Rational out(num_.eval(q), d);
  out.canonicalize();
  return out;
}

std::string MotiveClass::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

MotiveClass& MotiveClass::operator+=(const MotiveClass& rhs) {
  if (den_ == rhs.den_) {
    *this = MotiveClass(num_ + rhs.num_, den_);
  } else {
    *this = MotiveClass(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

MotiveClass& MotiveClass::operator-=(const MotiveClass& rhs) { return *this += -rhs; }

MotiveClass& MotiveClass::operator*=(const MotiveClass& rhs) {
  *this = MotiveClass(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

MotiveClass& MotiveClass::operator/=(const MotiveClass& rhs) {
  if (rhs.is_zero()) throw MathError("division by the zero class");
  *this = MotiveClass(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

MotiveSeries::MotiveSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  c_.assign(static_cast<std::size_t>(order) + 1, MotiveClass());
}

MotiveSeries::MotiveSeries(int order, std::vector<MotiveClass> coeffs) : MotiveSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

namespace {

void check_orders(const MotiveSeries& a, const MotiveSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series truncated at different orders");
}

}  // namespace

MotiveSeries operator+(const MotiveSeries& a, const MotiveSeries& b) {
  check_orders(a, b);
  MotiveSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

MotiveSeries operator-(const MotiveSeries& a, const MotiveSeries& b) {
  check_orders(a, b);
  MotiveSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) out[i] = a[i] - b[i];
  return out;
}

MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b) {
  check_orders(a, b);
  MotiveSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

MotiveSeries MotiveSeries::inverse() const {
  if (c_[0].is_zero()) throw MathError("series with zero constant term is not invertible");
  MotiveSeries out(order_);
  const MotiveClass inv0 = MotiveClass(1) / c_[0];
  out[0] = inv0;
  for (int n = 1; n <= order_; ++n) {
    MotiveClass acc;
    for (int k = 1; k <= n; ++k) acc += c_[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

MotiveClass proj_motive(int n) {
  if (n < -1) throw std::invalid_argument("projective space of dimension below -1");
  return MotiveClass(ZPoly(std::vector<Integer>(static_cast<std::size_t>(n + 1), 1)));
}

MotiveClass gm() { return MotiveClass::L() - 1; }

MotiveClass poly1_motive(int d1, int d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("degrees must be non-negative");
  if (d1 == 0 || d2 == 0) return MotiveClass::L(d1 + d2);
  return MotiveClass::L(d1 + d2) - MotiveClass::L(d1 + d2 - 1);
}

namespace {

// First entry at least a, second exactly b.
MotiveClass at_least_closed(int a, int b, int d1, int d2) {
  if (a > d1 || b > d2) return MotiveClass();
  const int alpha = d1 - a;
  const int beta = d2 - b;
  if (beta == 0) return MotiveClass::L(alpha);
  const MotiveClass frac = gm() / (MotiveClass::L() + 1);
  if (beta <= alpha) return frac * (MotiveClass::L(alpha + beta) - MotiveClass::L(alpha - beta));
  return frac * (MotiveClass::L(alpha + beta) + MotiveClass::L(beta - alpha - 1));
}

MotiveClass at_least_recursive(int a, int b, int d1, int d2) {
  if (a > d1 || b > d2) return MotiveClass();
  const int alpha = d1 - a;
  const int beta = d2 - b;
  if (beta == 0) return MotiveClass::L(alpha);
  return poly1_motive(alpha, beta) - at_least_recursive(b + 1, a, d2, d1);
}

template <typename AtLeast>
MotiveClass cond_motive(const VanishingCondition& g, int d1, int d2, AtLeast at_least) {
  switch (g.shape) {
    case VanishingCondition::Shape::kAtLeastFirst:
      return at_least(g.a, g.b, d1, d2);
    case VanishingCondition::Shape::kAtLeastSecond:
      return at_least(g.b, g.a, d2, d1);
    case VanishingCondition::Shape::kExact:
      break;
  }
  if (g.a > d1 || g.b > d2) return MotiveClass();
  return poly1_motive(d1 - g.a, d2 - g.b) - at_least(g.a + 1, g.b, d1, d2) -
         at_least(g.b + 1, g.a, d2, d1);
}

void check_condition(const VanishingCondition& g, int d1, int d2) {
  if (g.a < 1 || g.b < 1) throw std::invalid_argument("vanishing orders must be positive");
  if (g.a > d1 || g.b > d2) {
    throw std::invalid_argument("condition " + g.to_string() + " exceeds degrees (" +
                                std::to_string(d1) + "," + std::to_string(d2) + ")");
  }
}

}  // namespace

MotiveClass poly_cond_motive(const VanishingCondition& gamma, int d1, int d2) {
  check_condition(gamma, d1, d2);
  return cond_motive(gamma, d1, d2, at_least_closed);
}

MotiveClass poly_cond_motive_recursive(const VanishingCondition& gamma, int d1, int d2) {
  check_condition(gamma, d1, d2);
  return cond_motive(gamma, d1, d2, at_least_recursive);
}

MotiveClass stratum_gamma_motive(int l0, int l1, int n, const VanishingCondition& gamma) {
  const WeightVector w({l0, l1});
  if (!is_realizable(gamma, w, n)) {
    throw std::invalid_argument("condition " + gamma.to_string() + " is not realizable for " +
                                w.to_string() + " at height " + std::to_string(n));
  }
  const int D0 = l0 * n;
  const int D1 = l1 * n;
  MotiveClass sum = cond_motive(gamma, D0, D1, at_least_closed);
  for (int k = gamma.a; k < D0; ++k) sum += cond_motive(gamma, k, D1, at_least_closed);
  for (int l = gamma.b; l < D1; ++l) sum += cond_motive(gamma, D0, l, at_least_closed);
  MotiveClass out = (MotiveClass::L() + 1) * gm() * sum;
  out.polynomial();
  return out;
}

MotiveClass wmin_motive(const WeightVector& weights, int n) {
  if (n < 0) throw std::invalid_argument("height must be non-negative");
  const int N = weights.dimension();
  const int S = weights.total();
  const MotiveClass pN = proj_motive(N);
  const MotiveClass pRest = proj_motive(S - N - 2);
  if (n == 0) return pN;
  if (n == 1) return pN * (MotiveClass::L(S) - MotiveClass::L()) + MotiveClass::L(N + 1) * pRest;
  return MotiveClass::L((n - 2) * S + N + 2) * (MotiveClass::L(S - 1) - 1) *
         (MotiveClass::L(S - N - 1) * pN + pRest);
}

MotiveClass inertia_wmin_motive(const WeightVector& weights, int n,
                                const std::map<std::uint64_t, std::uint64_t>& orders) {
  MotiveClass out;
  for (const auto& [d, count] : orders) {
    const std::vector<int> sub = weights.divisible_by(static_cast<int>(d));
    if (sub.empty() || count == 0) continue;
    out += MotiveClass(static_cast<long>(count)) * wmin_motive(WeightVector(sub), n);
  }
  out.polynomial();
  return out;
}

MotiveSeries zeta_series(const WeightVector& weights, int order) {
  const int N = weights.dimension();
  const int S = weights.total();
  MotiveSeries numerator(order, {proj_motive(N), MotiveClass::L(N + 1) * proj_motive(S - N - 2)});
  MotiveSeries one_minus_lt(order, {1, -MotiveClass::L()});
  MotiveSeries geometric(order);
  for (int k = 0; k <= order; ++k) geometric[k] = MotiveClass::L(k * S);
  return one_minus_lt * geometric * numerator;
}

bool ambient_identity_check(const WeightVector& weights, int order) {
  const int N = weights.dimension();
  const int S = weights.total();
  MotiveSeries z(order);
  for (int k = 0; k <= order; ++k) z[k] = proj_motive(k);
  const MotiveSeries lhs = zeta_series(weights, order) * z;
  for (int k = 0; k <= order; ++k) {
    if (!(lhs[k] == proj_motive(k * S + N))) return false;
  }
  return true;
}

}  // namespace wps
