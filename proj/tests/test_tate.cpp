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

#include <doctest.h>

#include "support.hpp"
#include "wps/errors.hpp"
#include "wps/tate.hpp"

using namespace wps;

namespace {

const PrimeField F5(5);

BinaryForm st(int deg, int i, std::uint32_t c = 1) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(deg) + 1, 0);
  v[static_cast<std::size_t>(i)] = c;
  return BinaryForm(F5, deg, v);
}

const BinaryForm kZero4 = BinaryForm::zero(F5);

Place tplace() { return Place::finite(FpPoly(F5, {0, 1})); }

struct Expect {
  Kodaira kind;
  int k;
  JClass j;
  std::optional<TwistDatum> twist;
  int nu_delta;
};

void check_fiber(const BinaryForm& a4, const BinaryForm& a6, const Expect& e) {
  const WeierstrassModel model(a4, a6, 1);
  const FiberReport r = classify_place(model, tplace());
  CHECK(r.kodaira.kind == e.kind);
  CHECK(r.kodaira.k == e.k);
  CHECK(r.j == e.j);
  CHECK(r.twist == e.twist);
  CHECK(r.nu_delta == e.nu_delta);
}

// Reference table for short Weierstrass models in residue characteristic
// at least 5, keyed on the discriminant order first.
std::string reference_type(int a, int b, int d) {
  const auto ge = [](int v, int k) { return v >= k; };
  if (d == 0) return "I0";
  if (a == 0 || b == 0) return "I" + std::to_string(d);
  switch (d) {
    case 2:
      if (ge(a, 1) && b == 1) return "II";
      break;
    case 3:
      if (a == 1 && ge(b, 2)) return "III";
      break;
    case 4:
      if (ge(a, 2) && b == 2) return "IV";
      break;
    case 6:
      if ((a == 2 && ge(b, 3)) || (ge(a, 2) && b == 3)) return "I0*";
      break;
    case 8:
      if (ge(a, 3) && b == 4) return "IV*";
      break;
    case 9:
      if (a == 3 && ge(b, 5)) return "III*";
      break;
    case 10:
      if (ge(a, 4) && b == 5) return "II*";
      break;
    default:
      break;
  }
  if (d > 6 && a == 2 && b == 3) return "I" + std::to_string(d - 6) + "*";
  return "?";
}

}  // namespace

TEST_CASE("discriminant and j") {
  const BinaryForm a6 = st(6, 1) + st(6, 5);
  const DiscriminantJ z = discriminant_j(WeierstrassModel(BinaryForm::zero(F5), a6, 1));
  CHECK(z.j_num.is_zero());
  CHECK(z.delta == scale(a6 * a6, F5.reduce(-432)));
  const BinaryForm a4 = st(4, 1) + st(4, 3);
  const DiscriminantJ k = discriminant_j(WeierstrassModel(a4, BinaryForm::zero(F5), 1));
  CHECK(k.delta.degree() == 12);
  CHECK(factor_divisor(k.delta) == factor_divisor(a4 * a4 * a4));
  const DiscriminantJ ex = discriminant_j(WeierstrassModel(st(4, 2), st(6, 3), 1));
  // -16 * 31 = -496 = 4 mod 5
  CHECK(ex.delta == st(12, 6, 4));
}

TEST_CASE("generically singular models are rejected") {
  const BinaryForm u = st(2, 0) + st(2, 2);
  const BinaryForm a4 = scale(u * u, F5.reduce(-3));
  const BinaryForm a6 = scale(u * u * u, 2);
  CHECK_THROWS_AS(discriminant_j(WeierstrassModel(a4, a6, 1)), SingularModelError);
  CHECK_THROWS_AS(WeierstrassModel(st(3, 0), st(6, 0), 1), std::invalid_argument);
}

TEST_CASE("fiber table") {
  check_fiber(kZero4, st(6, 1), {Kodaira::kII, 0, JClass::kZero, TwistDatum{6, 1}, 2});
  check_fiber(st(4, 1), BinaryForm::zero(F5), {Kodaira::kIII, 0, JClass::k1728, TwistDatum{4, 1}, 3});
  check_fiber(kZero4, st(6, 2), {Kodaira::kIV, 0, JClass::kZero, TwistDatum{3, 1}, 4});
  check_fiber(st(4, 2), st(6, 3), {Kodaira::kI0Star, 0, JClass::kOther, TwistDatum{2, 1}, 6});
  check_fiber(kZero4, st(6, 3), {Kodaira::kI0Star, 0, JClass::kZero, TwistDatum{2, 1}, 6});
  check_fiber(st(4, 2), BinaryForm::zero(F5), {Kodaira::kI0Star, 0, JClass::k1728, TwistDatum{2, 1}, 6});
  check_fiber(kZero4, st(6, 4), {Kodaira::kIVStar, 0, JClass::kZero, TwistDatum{3, 2}, 8});
  check_fiber(st(4, 3), BinaryForm::zero(F5), {Kodaira::kIIIStar, 0, JClass::k1728, TwistDatum{4, 3}, 9});
  check_fiber(kZero4, st(6, 5), {Kodaira::kIIStar, 0, JClass::kZero, TwistDatum{6, 5}, 10});
  // a4 = -3 t^2 s^2, a6 = 2 t^3 s^3 + t^4 s^2
  check_fiber(st(4, 2, F5.reduce(-3)), st(6, 3, 2) + st(6, 4),
              {Kodaira::kInStar, 1, JClass::kInfinity, TwistDatum{2, 1}, 7});
  // a4 = -3 s^4, a6 = 2 s^6 + t s^5
  check_fiber(st(4, 0, F5.reduce(-3)), st(6, 0, 2) + st(6, 1),
              {Kodaira::kIn, 1, JClass::kInfinity, std::nullopt, 1});
  check_fiber(st(4, 0), st(6, 6), {Kodaira::kI0, 0, JClass::k1728, std::nullopt, 0});
  check_fiber(st(4, 0), st(6, 0) + st(6, 6), {Kodaira::kI0, 0, JClass::kOther, std::nullopt, 0});
}

TEST_CASE("I2* from a deeper discriminant") {
  // a4 = -3 t^2 s^2, a6 = 2 t^3 s^3 + t^5 s
  const WeierstrassModel model(st(4, 2, F5.reduce(-3)), st(6, 3, 2) + st(6, 5), 1);
  const FiberReport r = classify_place(model, tplace());
  CHECK(r.kodaira.to_string() == "I2*");
  CHECK(r.j == JClass::kInfinity);
  CHECK(r.twist == TwistDatum{2, 1});
  CHECK(r.nu_delta == 8);
}

TEST_CASE("non-minimal places are rejected") {
  const WeierstrassModel model(st(4, 4), st(6, 6), 1);
  CHECK_THROWS_AS(classify_place(model, tplace()), NonMinimalError);
  CHECK_THROWS_AS(classify_all(model), NonMinimalError);
}

TEST_CASE("classify all on the isotrivial example") {
  const Classification c = classify_all(WeierstrassModel(st(4, 2), st(6, 3), 1));
  REQUIRE(c.fibers.size() == 2);
  for (const auto& f : c.fibers) {
    CHECK(f.kodaira.to_string() == "I0*");
    CHECK(f.j == JClass::kOther);
  }
  CHECK(c.gamma == std::vector<TwistDatum>{{2, 1}, {2, 1}});
  CHECK(c.delta_degree == 12);
}

TEST_CASE("semistable model has empty gamma") {
  const Classification c = classify_all(WeierstrassModel(st(4, 0), st(6, 6), 1));
  CHECK(c.gamma.empty());
  CHECK_FALSE(c.fibers.empty());
  for (const auto& f : c.fibers) CHECK(f.kodaira.kind == Kodaira::kIn);
  CHECK(c.delta_degree == 12);
}

TEST_CASE("kodaira labels") {
  CHECK(KodairaType{Kodaira::kIn, 3}.to_string() == "I3");
  CHECK(KodairaType{Kodaira::kIVStar, 0}.to_string() == "IV*");
  CHECK(to_string(JClass::k1728) == "1728");
  CHECK(to_string(JClass::kInfinity) == "inf");
}

TEST_CASE("random models agree with the reference table") {
  testing::Rng rng(2024);
  for (std::uint64_t p : {5, 7, 11}) {
    const PrimeField F(p);
    int checked = 0;
    for (int iter = 0; iter < 400; ++iter) {
      const int n = 1 + static_cast<int>(rng() % 2);
      BinaryForm a4 = testing::random_form(F, 4 * n, rng);
      BinaryForm a6 = testing::random_form(F, 6 * n, rng);
      // bias towards additive fibres at t
      const int shift = static_cast<int>(rng() % 4);
      if (shift && !a4.is_zero() && a4.degree() >= shift) {
        std::vector<std::uint32_t> c = a4.coeffs();
        for (int i = 0; i < shift; ++i) c[static_cast<std::size_t>(i)] = 0;
        a4 = BinaryForm(F, 4 * n, c);
      }
      if (shift && !a6.is_zero()) {
        std::vector<std::uint32_t> c = a6.coeffs();
        for (int i = 0; i < shift + 1 && i < static_cast<int>(c.size()); ++i) c[static_cast<std::size_t>(i)] = 0;
        a6 = BinaryForm(F, 6 * n, c);
      }
      if (a4.is_zero() && a6.is_zero()) continue;
      const WeierstrassModel model(a4, a6, n);
      if (!is_minimal(model.series())) continue;
      Classification c;
      try {
        c = classify_all(model);
      } catch (const SingularModelError&) {
        continue;
      }
      ++checked;
      for (const auto& f : c.fibers) {
        const int a = f.nu_a4 == kInfiniteOrder ? 99 : f.nu_a4;
        const int b = f.nu_a6 == kInfiniteOrder ? 99 : f.nu_a6;
        CHECK(f.kodaira.to_string() == reference_type(a, b, f.nu_delta));
      }
      CHECK(c.gamma == height_report(model.series()).gamma());
    }
    CHECK(checked > 200);
  }
}
