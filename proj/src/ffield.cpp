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

#include "wps/ffield.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "wps/errors.hpp"

namespace wps {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p <= 3 || p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime p with 3 < p < 2^31, got " +
                                std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw MathError("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

namespace {
void check_same(const Fp& a, const Fp& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("mixing elements of different fields");
}
}  // namespace

Fp operator+(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field_, a.field_.add(a.value_, b.value_));
}
Fp operator-(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field_, a.field_.sub(a.value_, b.value_));
}
Fp operator*(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field_, a.field_.mul(a.value_, b.value_));
}
Fp operator/(const Fp& a, const Fp& b) {
  check_same(a, b);
  return Fp(a.field_, a.field_.div(a.value_, b.value_));
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

int delta_divides(std::uint64_t x, std::uint64_t q) {
  if (x == 0) throw std::invalid_argument("delta_divides: x must be positive");
  if (q < 2) throw std::invalid_argument("delta_divides: q must be at least 2");
  return (q - 1) % x == 0 ? 1 : 0;
}

std::uint64_t euler_phi(std::uint64_t n) noexcept {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::map<std::uint64_t, std::uint64_t> units_by_order(std::uint64_t q) {
  if (q <= 3) throw std::invalid_argument("units_by_order: q must exceed 3");
  std::map<std::uint64_t, std::uint64_t> out;
  const std::uint64_t m = q - 1;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out[d] = euler_phi(d);
    out[m / d] = euler_phi(m / d);
  }
  return out;
}

}  // namespace wps
