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

#include "wps/fppoly.hpp"

#include <algorithm>
#include <random>

#include "wps/errors.hpp"

namespace wps {

FpPoly::FpPoly(const PrimeField& field, std::vector<std::uint32_t> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= field_.p();
  trim();
}

FpPoly FpPoly::constant(const PrimeField& field, std::uint32_t c) {
  return FpPoly(field, {c});
}

FpPoly FpPoly::monomial(const PrimeField& field, std::uint32_t c, int k) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(k) + 1, 0);
  v[k] = c;
  return FpPoly(field, std::move(v));
}

void FpPoly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FpPoly::eval(std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
  FpPoly out(*this);
  for (auto& x : out.c_) x = field_.mul(x, s);
  out.trim();
  return out;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(field_);
  std::vector<std::uint32_t> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    v[k - 1] = field_.mul(c_[k], static_cast<std::uint32_t>(k % field_.p()));
  }
  return FpPoly(field_, std::move(v));
}

FpPoly FpPoly::hasse_derivative(int i) const {
  if (i == 0) return *this;
  if (degree() < i) return FpPoly(field_);
  // Pascal's triangle mod p up to row deg.
  const int deg = degree();
  std::vector<std::uint32_t> row(1, 1);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(deg - i) + 1, 0);
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) {
      std::vector<std::uint32_t> next(static_cast<std::size_t>(k) + 1, 1);
      for (int j = 1; j < k; ++j) next[j] = field_.add(row[j - 1], row[j]);
      row = std::move(next);
    }
    if (k >= i) v[k - i] = field_.mul(c_[k], row[i]);
  }
  return FpPoly(field_, std::move(v));
}

FpPoly& FpPoly::operator+=(const FpPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_.add(c_[i], rhs.c_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = field_.sub(c_[i], rhs.c_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<std::uint32_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(c_[i], rhs.c_[j]));
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const PrimeField& f = a.field();
  if (a.degree() < b.degree()) return {FpPoly(f), a};
  std::vector<std::uint32_t> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  const std::uint32_t lead_inv = f.inv(b.leading());
  std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int k = a.degree(); k >= db; --k) {
    const std::uint32_t c = f.mul(r[k], lead_inv);
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, d[j]));
  }
  return {FpPoly(f, std::move(q)), FpPoly(f, std::move(r))};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly pow(const FpPoly& a, unsigned e) {
  FpPoly result = FpPoly::constant(a.field(), 1);
  FpPoly base = a;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& mod) {
  FpPoly result = FpPoly::constant(a.field(), 1) % mod;
  FpPoly base = a % mod;
  while (e > 0) {
    if (e & 1) result = (result * base) % mod;
    e >>= 1;
    if (e > 0) base = (base * base) % mod;
  }
  return result;
}

int multiplicity(FpPoly f, const FpPoly& place) {
  if (f.is_zero()) throw MathError("multiplicity of the zero polynomial is infinite");
  if (place.is_constant()) throw std::invalid_argument("multiplicity: place must be nonconstant");
  int k = 0;
  for (;;) {
    auto [q, r] = divmod(f, place);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.field().p();
  std::vector<std::uint32_t> v(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (int k = 0; k <= f.degree(); k += static_cast<int>(p)) v[k / p] = f[k];
  return FpPoly(f.field(), std::move(v));
}

void sff_into(const FpPoly& f, int scale, std::vector<PolyFactor>& out) {
  if (f.is_constant()) return;
  const FpPoly df = f.derivative();
  if (df.is_zero()) {
    sff_into(pth_root(f), scale * static_cast<int>(f.field().p()), out);
    return;
  }
  FpPoly c = gcd(f, df);
  FpPoly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (!fac.is_constant()) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_constant()) sff_into(pth_root(c.monic()), scale * static_cast<int>(f.field().p()), out);
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f) {
  const PrimeField& F = f.field();
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly z = FpPoly::monomial(F, 1, 1);
  FpPoly h = z % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, F.p(), f);
    FpPoly g = gcd(f, h - z);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

// Cantor-Zassenhaus splitting of a monic square-free product of irreducibles of degree d.
void equal_degree(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const PrimeField& F = g.field();
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.p() - 1);
  for (;;) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(g.degree()));
    for (auto& x : v) x = coeff(rng);
    FpPoly a(F, std::move(v));
    if (a.is_constant()) continue;
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p - 1)/2)
    FpPoly norm = FpPoly::constant(F, 1);
    FpPoly frob = a % g;
    for (int k = 0; k < d; ++k) {
      norm = (norm * frob) % g;
      frob = powmod(frob, F.p(), g);
    }
    FpPoly b = powmod(norm, (F.p() - 1) / 2, g) - FpPoly::constant(F, 1);
    FpPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const FpPoly& f) {
  std::vector<PolyFactor> out;
  sff_into(f.monic(), 1, out);
  return out;
}

std::vector<PolyFactor> factor(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<PolyFactor> out;
  for (const auto& [sq, e] : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree(sq)) {
      std::vector<FpPoly> irr;
      equal_degree(g, d, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), e});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
  // Square-free parts are coprime, so irreducible factors never repeat.
  return out;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor(f);
  return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace wps
