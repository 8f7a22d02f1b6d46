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

#include "wps/census.hpp"
#include "wps/errors.hpp"
#include "wps/ffield.hpp"
#include "wps/motive.hpp"

using namespace wps;

namespace {

CensusConfig config(std::uint64_t p) {
  CensusConfig cfg;
  cfg.p = p;
  return cfg;
}

VanishingCondition cond(const char* text) { return VanishingCondition::parse(text); }

}  // namespace

TEST_CASE("weighted census examples") {
  const CensusResult a = enumerate_wmin(WeightVector({1, 1}), 1, config(5));
  CHECK(a.raw == 480);
  CHECK(a.weighted == 120);
  CHECK(a.weighted == specialize(wmin_motive(WeightVector({1, 1}), 1), 5));
  const CensusResult b = enumerate_wmin(WeightVector({2, 2}), 0, config(5));
  CHECK(b.raw == 24);
  CHECK(b.weighted == 6);
  CHECK(b.orbits == 12);
  const CensusResult c = enumerate_wmin(WeightVector({2}), 0, config(5));
  CHECK(c.raw == 4);
  CHECK(c.weighted == 1);
  CHECK(c.orbits == 2);
}

TEST_CASE("weighted counts match the formula") {
  for (std::uint64_t p : {5, 7}) {
    for (const auto& [w, nmax] : std::vector<std::pair<std::vector<int>, int>>{
             {{1, 1}, 2}, {{1, 2}, 1}, {{2, 2}, 1}, {{1, 1, 1}, 1}, {{3}, 2}}) {
      const WeightVector wv(w);
      for (int n = 0; n <= nmax; ++n) {
        const CensusResult r = enumerate_wmin(wv, n, config(p));
        CHECK(r.weighted == specialize(wmin_motive(wv, n), p));
        CHECK(Rational(static_cast<unsigned long>(r.raw)) == r.weighted * Rational(static_cast<unsigned long>(p - 1)));
        CHECK(Rational(r.orbits) == specialize(inertia_wmin_motive(wv, n, units_by_order(p)), p));
      }
    }
  }
}

TEST_CASE("Burnside orbits agree with explicit orbits") {
  for (std::uint64_t p : {5, 7}) {
    for (const auto& [w, n] : std::vector<std::pair<std::vector<int>, int>>{
             {{1, 1}, 1}, {{2, 2}, 1}, {{1, 2}, 1}, {{4, 6}, 0}, {{4}, 1}, {{6}, 1}, {{2, 3}, 0}}) {
      const WeightVector wv(w);
      CHECK(enumerate_wmin(wv, n, config(p)).orbits == enumerate_wmin_orbits_explicit(wv, n, config(p)));
    }
  }
}

TEST_CASE("results do not depend on workers or chunking") {
  const WeightVector w({2, 3});
  CensusConfig base = config(5);
  const CensusResult ref = enumerate_wmin(w, 1, base);
  for (unsigned workers : {2u, 3u}) {
    for (std::uint64_t chunk : {1000u, 7919u, 1u << 20}) {
      CensusConfig cfg = base;
      cfg.workers = workers;
      cfg.chunk_size = chunk;
      const CensusResult r = enumerate_wmin(w, 1, cfg);
      CHECK(r.raw == ref.raw);
      CHECK(r.orbits == ref.orbits);
      CHECK(r.checksum == ref.checksum);
    }
  }
  CensusConfig seeded = base;
  seeded.seed = 7;
  const CensusResult s = enumerate_wmin(w, 1, seeded);
  CHECK(s.raw == ref.raw);
  CHECK(s.checksum != ref.checksum);
}

TEST_CASE("budget guard") {
  CensusConfig cfg = config(5);
  cfg.budget = 1000;
  CHECK_THROWS_AS(enumerate_wmin(WeightVector({2, 3}), 1, cfg), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_wmin_orbits_explicit(WeightVector({2, 3}), 1, cfg), BudgetExceeded);
  cfg.force = true;
  CHECK(enumerate_wmin(WeightVector({1, 1}), 2, cfg).weighted ==
        specialize(wmin_motive(WeightVector({1, 1}), 2), 5));
  CHECK(coefficient_space_size(5, WeightVector({4, 6}), 1) == 244140625ULL);
  CHECK_THROWS_AS(enumerate_wmin(WeightVector({1, 1}), 1, config(65537)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_wmin(WeightVector({1, 1}), 1, config(9)), std::invalid_argument);
}

TEST_CASE("polynomial pair census") {
  CHECK(enumerate_poly(std::nullopt, 1, 1, config(5)) == 20);
  CHECK(enumerate_poly(cond(">=1,1"), 2, 2, config(5)) == 16);
  CHECK(enumerate_poly(cond(">=2,1"), 2, 6, config(5)) == 2500);
  for (std::uint64_t p : {5, 7, 11}) {
    CHECK(enumerate_poly(cond(">=2,3"), 4, 3, config(p)) == p * p);
    CHECK(Rational(static_cast<unsigned long>(enumerate_poly(cond("1,>=2"), 2, 3, config(p)))) ==
          specialize(poly_cond_motive(cond("1,>=2"), 2, 3), p));
  }
  CHECK(enumerate_poly(cond("3,1"), 2, 2, config(5)) == 0);
}

TEST_CASE("stratum census") {
  for (const auto& g : realizable_conditions(WeightVector({2, 3}), 1)) {
    const CensusResult r = enumerate_stratum(2, 3, 1, g, config(5));
    CHECK(r.weighted == specialize(stratum_gamma_motive(2, 3, 1, g), 5));
  }
  for (const auto& g : realizable_conditions(WeightVector({1, 2}), 2)) {
    const CensusResult r = enumerate_stratum(1, 2, 2, g, config(5));
    CHECK(r.weighted == specialize(stratum_gamma_motive(1, 2, 2, g), 5));
  }
  CHECK_THROWS_AS(enumerate_stratum(4, 6, 1, cond(">=4,6"), config(5)), std::invalid_argument);
}

TEST_CASE("series iteration covers the coefficient box") {
  std::uint64_t count = 0;
  const PrimeField F(5);
  for_each_series(F, WeightVector({1, 2}), 1, [&](const WeightedLinearSeries& w) {
    CHECK(w.height() == 1);
    ++count;
  });
  CHECK(count == coefficient_space_size(5, WeightVector({1, 2}), 1) - 1);
}
