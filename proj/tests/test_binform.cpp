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
#include "wps/binform.hpp"
#include "wps/errors.hpp"

using namespace wps;

namespace {

const PrimeField F5(5);

BinaryForm form(int deg, std::vector<std::uint32_t> c) { return BinaryForm(F5, deg, std::move(c)); }

Place finite(std::vector<std::uint32_t> c) { return Place::finite(FpPoly(F5, std::move(c))); }

}  // namespace

TEST_CASE("form arithmetic") {
  const BinaryForm s = BinaryForm::s(F5);
  const BinaryForm t = BinaryForm::t(F5);
  CHECK(t * s == form(2, {0, 1, 0}));
  CHECK(pow(t, 3) == form(3, {0, 0, 0, 1}));
  CHECK(evaluate(s * pow(t, 3), 1, 2).value() == 3);
  CHECK_THROWS_AS(t + pow(s, 2), std::invalid_argument);
  CHECK((t - t).is_zero());
  CHECK(scale(t, 3) == form(1, {0, 3}));
  CHECK(exact_divide(t * s * s, s) == t * s);
  CHECK_THROWS_AS(BinaryForm(F5, 2, {1, 2}), std::invalid_argument);
  CHECK(BinaryForm(F5, 2, {0, 0, 0}).is_zero());
  CHECK_THROWS_AS(BinaryForm::zero(F5).degree(), MathError);
}

TEST_CASE("infinity order") {
  CHECK(form(3, {0, 1, 0, 0}).infinity_order() == 2);
  CHECK(form(3, {1, 0, 0, 1}).infinity_order() == 0);
}

TEST_CASE("gcd") {
  const BinaryForm s = BinaryForm::s(F5);
  const BinaryForm t = BinaryForm::t(F5);
  CHECK(gcd(s * t, t * t) == t);
  const BinaryForm t2p1 = form(2, {1, 0, 1});
  const BinaryForm tm2s = form(1, {3, 1});
  CHECK(gcd(t2p1, tm2s) == tm2s);
  CHECK(gcd(t2p1, BinaryForm::constant(F5, 1)) == BinaryForm::constant(F5, 1));
  CHECK(gcd(s * s, BinaryForm::zero(F5)) == s * s);
  CHECK_THROWS_AS(gcd(BinaryForm::zero(F5), BinaryForm::zero(F5)), MathError);
}

TEST_CASE("valuation") {
  const BinaryForm s = BinaryForm::s(F5);
  const BinaryForm t = BinaryForm::t(F5);
  const BinaryForm st3 = s * pow(t, 3);
  CHECK(valuation(st3, finite({0, 1})) == 3);
  CHECK(valuation(st3, Place::infinity(F5)) == 1);
  const BinaryForm tm2s = form(1, {3, 1});
  CHECK(valuation(tm2s * tm2s * s, finite({3, 1})) == 2);
  CHECK(valuation(form(2, {1, 0, 1}), finite({0, 1})) == 0);
  CHECK_THROWS_AS(valuation(BinaryForm::zero(F5), finite({0, 1})), MathError);
  CHECK_THROWS_AS(finite({1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(finite({0, 2}), std::invalid_argument);
}

TEST_CASE("factor divisor examples") {
  const BinaryForm s = BinaryForm::s(F5);
  const BinaryForm t = BinaryForm::t(F5);
  CHECK(factor_divisor(t * t * s) ==
        Divisor({{finite({0, 1}), 2}, {Place::infinity(F5), 1}}));
  CHECK(factor_divisor(form(2, {1, 0, 1})) == Divisor({{finite({3, 1}), 1}, {finite({2, 1}), 1}}));
  const Divisor irr = factor_divisor(form(2, {2, 0, 1}));
  REQUIRE(irr.terms().size() == 1);
  CHECK(irr.terms()[0].place.degree() == 2);
  CHECK(irr.degree() == 2);
  CHECK(factor_divisor(BinaryForm::constant(F5, 3)).empty());
  CHECK_THROWS_AS(factor_divisor(BinaryForm::zero(F5)), MathError);
}

TEST_CASE("divisor merging and order") {
  const Divisor d({{Place::infinity(F5), 1}, {finite({0, 1}), 2}, {finite({2, 1}), 0}, {finite({0, 1}), 1}});
  REQUIRE(d.terms().size() == 2);
  CHECK(d.terms()[0].place == finite({0, 1}));
  CHECK(d.terms()[0].multiplicity == 3);
  CHECK(d.terms()[1].place.is_infinity());
  CHECK(d.multiplicity(finite({2, 1})) == 0);
  CHECK(d.degree() == 4);
  CHECK_THROWS_AS(Divisor({{finite({0, 1}), -1}}), std::invalid_argument);
}

TEST_CASE("factorization round trip over all small forms") {
  for (std::uint64_t p : {5, 7}) {
    const PrimeField F(p);
    for (int deg = 0; deg <= 4; ++deg) {
      std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1, 0);
      for (;;) {
        const BinaryForm f(F, deg, c);
        if (!f.is_zero()) {
          const Divisor d = factor_divisor(f);
          CHECK(d.degree() == deg);
          CHECK(scale(divisor_form(d, F), leading_unit(f)) == f);
          for (const auto& term : d.terms()) CHECK(valuation(f, term.place) == term.multiplicity);
        }
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == p) c[i++] = 0;
        if (i == c.size()) break;
      }
    }
  }
}

TEST_CASE("factorization properties on random forms") {
  testing::Rng rng(11);
  for (std::uint64_t p : {5, 13, 101}) {
    const PrimeField F(p);
    for (int iter = 0; iter < 200; ++iter) {
      const int deg = static_cast<int>(rng() % 13);
      const BinaryForm f = testing::random_nonzero_form(F, deg, rng);
      const Divisor d = factor_divisor(f, 1);
      CHECK(d == factor_divisor(f, 99));
      CHECK(d.degree() == deg);
      CHECK(scale(divisor_form(d, F), leading_unit(f)) == f);
      const BinaryForm g = testing::random_nonzero_form(F, static_cast<int>(rng() % 7), rng);
      const BinaryForm h = gcd(f * g, f);
      CHECK(scale(h, F.inv(leading_unit(h))) == scale(f, F.inv(leading_unit(f))));
      const Divisor fg = factor_divisor(f * g);
      for (const auto& term : fg.terms()) {
        CHECK(valuation(f * g, term.place) == valuation(f, term.place) + valuation(g, term.place));
        CHECK(valuation(gcd(f, g), term.place) ==
              std::min(valuation(f, term.place), valuation(g, term.place)));
      }
    }
  }
}
