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

#ifndef WPS_FFIELD_HPP
#define WPS_FFIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <map>

namespace wps {

/// A prime field F_p with p > 3 and p < 2^31. Residues are kept as least
/// non-negative representatives.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime in (3, 2^31).
  explicit PrimeField(std::uint64_t p);

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws MathError on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p carrying its field.
class Fp {
 public:
  Fp(const PrimeField& field, std::int64_t v) : field_(field), value_(field.reduce(v)) {}

  std::uint32_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp inverse() const { return Fp(field_, field_.inv(value_)); }
  Fp pow(std::uint64_t e) const { return Fp(field_, field_.pow(value_, e)); }

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a) { return Fp(a.field_, a.field_.neg(a.value_)); }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  PrimeField field_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

bool is_prime(std::uint64_t n) noexcept;

/// 1 if x divides q - 1, else 0.
int delta_divides(std::uint64_t x, std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n) noexcept;

/// Number of elements of each multiplicative order in a cyclic group of
/// order q - 1, keyed by the order.
std::map<std::uint64_t, std::uint64_t> units_by_order(std::uint64_t q);

}  // namespace wps

#endif  // WPS_FFIELD_HPP
