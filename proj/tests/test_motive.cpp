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

#include "wps/errors.hpp"
#include "wps/ffield.hpp"
#include "wps/motive.hpp"

using namespace wps;

namespace {

MotiveClass L(int k = 1) { return MotiveClass::L(k); }
VanishingCondition cond(const char* text) { return VanishingCondition::parse(text); }
Rational at(const MotiveClass& m, long q) { return m.specialize(Integer(q)); }

}  // namespace

TEST_CASE("integer polynomials") {
  const ZPoly a({-1, 0, 1});
  const ZPoly b({1, 1});
  CHECK(gcd(a, b) == b);
  CHECK(exact_divide(a, b) == ZPoly({-1, 1}));
  CHECK_THROWS_AS(exact_divide(a, ZPoly({2, 1})), std::invalid_argument);
  CHECK(ZPoly({6, 0, 4}).content() == 2);
  CHECK(a.eval(5) == 24);
  CHECK(ZPoly({0, 0, -1, 0, 0, 0, 0, 0, 1}).to_string() == "L^8 - L^2");
  CHECK((a * b).degree() == 3);
  CHECK((a - a).is_zero());
}

TEST_CASE("class normal form") {
  CHECK(MotiveClass(ZPoly({-1, 0, 1}), ZPoly({1, 1})) == L() - 1);
  const MotiveClass r(ZPoly({-2, 2}), ZPoly({-2, -2}));
  CHECK(r.num() == ZPoly({1, -1}));
  CHECK(r.den() == ZPoly({1, 1}));
  CHECK_FALSE(r.is_polynomial());
  CHECK_THROWS_AS(r.polynomial(), std::logic_error);
  CHECK(MotiveClass(ZPoly(), ZPoly({3, 7})) == MotiveClass(0));
  CHECK_THROWS_AS(MotiveClass(ZPoly({1}), ZPoly()), MathError);
  CHECK_THROWS_AS(L() / MotiveClass(0), MathError);
  CHECK((L(3) - 1) / (L() - 1) == proj_motive(2));
}

TEST_CASE("projective spaces") {
  CHECK(proj_motive(1) == L() + 1);
  CHECK(proj_motive(0) == MotiveClass(1));
  CHECK(proj_motive(-1) == MotiveClass(0));
  CHECK(gm() == L() - 1);
  CHECK(at(proj_motive(1), 5) == 6);
}

TEST_CASE("specialization") {
  CHECK(at(L(10) - L(8), 5) == 9375000);
  CHECK(at((L() + 1) / (L() - 1), 3) == 2);
  CHECK_THROWS_AS(at((L() + 1) / (L() - 1), 1), MathError);
  CHECK(at(MotiveClass(1) / (L() + 1), 5) == Rational(1, 6));
}

TEST_CASE("coprime monic pairs") {
  CHECK(poly1_motive(1, 1) == L(2) - L());
  CHECK(at(poly1_motive(1, 1), 5) == 20);
  CHECK(poly1_motive(0, 3) == L(3));
  CHECK(poly1_motive(2, 0) == L(2));
  CHECK(poly1_motive(2, 3) == L(5) - L(4));
  CHECK(poly1_motive(0, 0) == MotiveClass(1));
}

TEST_CASE("conditioned pairs") {
  CHECK(poly_cond_motive(cond(">=1,1"), 2, 2) == (L() - 1) * (L() - 1));
  CHECK(at(poly_cond_motive(cond(">=1,1"), 2, 2), 5) == 16);
  CHECK(poly_cond_motive(cond(">=2,1"), 2, 6) == (L() - 1) * L(4));
  CHECK(at(poly_cond_motive(cond(">=2,1"), 2, 6), 5) == 2500);
  CHECK(poly_cond_motive(cond(">=3,2"), 3, 2) == L(0));
  CHECK_THROWS_AS(poly_cond_motive(cond("3,1"), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(poly_cond_motive(cond("0,1"), 2, 2), std::invalid_argument);
}

TEST_CASE("closed form equals recursion and is polynomial") {
  using S = VanishingCondition::Shape;
  for (int d1 = 0; d1 <= 8; ++d1) {
    for (int d2 = 0; d2 <= 8; ++d2) {
      CHECK(poly1_motive(d1, d2).is_polynomial());
      CHECK(poly1_motive(d1, d2) == poly1_motive(d2, d1));
      for (auto shape : {S::kAtLeastFirst, S::kAtLeastSecond, S::kExact}) {
        for (int a = 1; a <= std::min(d1, 4); ++a) {
          for (int b = 1; b <= std::min(d2, 4); ++b) {
            const VanishingCondition g{shape, a, b};
            const MotiveClass closed = poly_cond_motive(g, d1, d2);
            CHECK(closed.is_polynomial());
            CHECK(closed == poly_cond_motive_recursive(g, d1, d2));
            const S mirror = shape == S::kAtLeastFirst    ? S::kAtLeastSecond
                             : shape == S::kAtLeastSecond ? S::kAtLeastFirst
                                                          : S::kExact;
            CHECK(closed == poly_cond_motive(VanishingCondition{mirror, b, a}, d2, d1));
          }
        }
      }
    }
  }
}

TEST_CASE("stratum motives") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(stratum_gamma_motive(4, 6, n, cond(">=1,1")) == L(10 * n) - L(10 * n - 2));
    CHECK(stratum_gamma_motive(4, 6, n, cond("2,3")) ==
          L(10 * n - 3) - L(10 * n - 4) - L(10 * n - 5) + L(10 * n - 6));
    CHECK(stratum_gamma_motive(4, 6, n, cond(">=4,5")) == L(10 * n - 7) - L(10 * n - 9));
  }
  CHECK_THROWS_AS(stratum_gamma_motive(4, 6, 1, cond(">=4,6")), std::invalid_argument);
  for (const auto& g : realizable_conditions(WeightVector({4, 6}), 2)) {
    CHECK(stratum_gamma_motive(4, 6, 2, g).is_polynomial());
  }
}

TEST_CASE("minimal series motives") {
  const WeightVector w46({4, 6});
  CHECK(wmin_motive(w46, 0) == L() + 1);
  CHECK(wmin_motive(w46, 1) == (L() + 1) * (L(10) - L()) + L(2) * (L(8) - 1) / (L() - 1));
  CHECK(at(wmin_motive(w46, 1), 5) == 61035120);
  CHECK(wmin_motive(WeightVector({1, 1}), 1) == L() * (L(2) - 1));
  CHECK(at(wmin_motive(WeightVector({1, 1}), 1), 5) == 120);
  CHECK_THROWS_AS(wmin_motive(w46, -1), std::invalid_argument);
  for (int n = 0; n <= 4; ++n) CHECK(wmin_motive(WeightVector({2, 4, 6}), n).is_polynomial());
}

TEST_CASE("inertia sums") {
  const WeightVector w46({4, 6});
  for (int n = 0; n <= 2; ++n) {
    CHECK(inertia_wmin_motive(w46, n, units_by_order(5)) ==
          2 * wmin_motive(w46, n) + 2 * wmin_motive(WeightVector({4}), n));
    CHECK(inertia_wmin_motive(w46, n, units_by_order(7)) ==
          2 * wmin_motive(w46, n) + 4 * wmin_motive(WeightVector({6}), n));
    CHECK(inertia_wmin_motive(WeightVector({2, 2}), n, units_by_order(13)) ==
          2 * wmin_motive(WeightVector({2, 2}), n));
  }
}

TEST_CASE("zeta series") {
  for (const auto& w : {WeightVector({4, 6}), WeightVector({2, 3}), WeightVector({1, 1, 1}),
                        WeightVector({2, 4, 6}), WeightVector({1, 5})}) {
    CHECK(ambient_identity_check(w, 6));
    const MotiveSeries z = zeta_series(w, 6);
    CHECK(z[0] == proj_motive(w.dimension()));
    for (int n = 0; n <= 6; ++n) CHECK(z[n] == wmin_motive(w, n));
  }
}

TEST_CASE("series arithmetic") {
  const MotiveSeries a(4, {1, -L()});
  const MotiveSeries inv = a.inverse();
  for (int k = 0; k <= 4; ++k) CHECK(inv[k] == L(k));
  const MotiveSeries one = a * inv;
  CHECK(one[0] == MotiveClass(1));
  for (int k = 1; k <= 4; ++k) CHECK(one[k].is_zero());
  CHECK_THROWS(MotiveSeries(4, {0, 1}).inverse());
}
