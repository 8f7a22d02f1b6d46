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

#include "wps/counting.hpp"

using namespace wps;

namespace {

Rational pw(long q, unsigned long e) { return Rational(ipow(Integer(q), e)); }

}  // namespace

TEST_CASE("type II count at B = q^12") {
  for (long q : {5, 7, 11, 13, 25, 49}) {
    const CountResult r = count_curves(static_cast<std::uint64_t>(q), 1, CountMode::kKodaira, "II");
    REQUIRE(r.closed.has_value());
    CHECK(*r.closed == 2 * (Rational(q * q) - 1) * pw(q, 8));
    CHECK(r.summed == *r.closed);
  }
}

TEST_CASE("weighted total at q = 5") {
  const CountResult r = count_curves(5, 2, CountMode::kWeighted);
  const Rational expected = (pw(5, 9) - 1) / (pw(5, 8) - pw(5, 7)) * pw(5, 20) - pw(5, 4);
  REQUIRE(r.closed.has_value());
  CHECK(*r.closed == expected);
  CHECK(r.summed == expected);
}

TEST_CASE("unweighted total at q = 5") {
  const CountResult r = count_curves(5, 1, CountMode::kUnweighted);
  const Rational expected = 2 * (pw(5, 9) - 1) / (pw(5, 8) - pw(5, 7)) * pw(5, 10) - 2 * pw(5, 2) +
                            2 * (pw(5, 3) - 1) / (pw(5, 3) - pw(5, 2)) * pw(5, 4) + 2;
  CHECK(*r.closed == expected);
  CHECK(r.summed == expected);
  CHECK(expected == 122071752);
  CHECK(r.breakdown.size() == 4);
}

TEST_CASE("closed forms agree with sums") {
  for (std::uint64_t q : {5, 7, 11, 13, 17, 19, 23, 25, 121}) {
    for (int m = 1; m <= 3; ++m) {
      CHECK(count_curves(q, m, CountMode::kWeighted).match());
      CHECK(count_curves(q, m, CountMode::kUnweighted).match());
      for (const auto& t : kodaira_thetas()) CHECK(count_curves(q, m, CountMode::kKodaira, t.name).match());
    }
  }
}

TEST_CASE("zero exponent has no closed form") {
  const CountResult r = count_curves(5, 0, CountMode::kWeighted);
  CHECK_FALSE(r.closed.has_value());
  CHECK_FALSE(r.match());
  CHECK(r.summed == 5);
  CHECK(count_curves(5, 0, CountMode::kKodaira, "II").summed == 0);
}

TEST_CASE("intro constants") {
  const IntroConstants k = intro_constants(13);
  CHECK(k.a == (pw(13, 9) - 1) / (pw(13, 8) - pw(13, 7)));
  CHECK(k.b == (pw(13, 5) - 1) / (pw(13, 5) - pw(13, 4)));
  CHECK(k.c == (pw(13, 3) - 1) / (pw(13, 3) - pw(13, 2)));
  CHECK(k.d == 6);
  CHECK(intro_constants(11).d == 0);
  CHECK(intro_constants(7).b != 0);
  CHECK(intro_constants(7).c == 0);
}

TEST_CASE("theta list") {
  CHECK(kodaira_thetas().size() == 9);
  CHECK(find_theta("I0*").name == "Ik*");
  CHECK(find_theta("II*").gamma == VanishingCondition::parse(">=4,5"));
  CHECK_THROWS_AS(find_theta("V"), std::invalid_argument);
  CHECK_THROWS_AS(count_curves(5, 1, CountMode::kKodaira, ""), std::invalid_argument);
}

TEST_CASE("field size validation") {
  CHECK_THROWS_AS(count_curves(9, 1, CountMode::kWeighted), std::invalid_argument);
  CHECK_THROWS_AS(count_curves(6, 1, CountMode::kWeighted), std::invalid_argument);
  CHECK_THROWS_AS(count_curves(8, 1, CountMode::kWeighted), std::invalid_argument);
  CHECK_THROWS_AS(count_curves(5, -1, CountMode::kWeighted), std::invalid_argument);
  CHECK(parse_count_mode("kodaira") == CountMode::kKodaira);
  CHECK_THROWS_AS(parse_count_mode("other"), std::invalid_argument);
  CHECK(to_string(CountMode::kUnweighted) == "unweighted");
}
