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

#include "wps/verify.hpp"

#include <chrono>

#include "wps/counting.hpp"
#include "wps/ffield.hpp"

namespace wps {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string weights_name(const std::vector<int>& w) { return WeightVector(w).to_string(); }

CaseResult compare(std::string name, const Rational& formula, const Rational& oracle, Clock::time_point t) {
  return {std::move(name), formula.get_str(), oracle.get_str(), formula == oracle, false, since(t)};
}

CaseResult skipped(std::string name) { return {std::move(name), "", "", true, true, 0}; }

std::uint64_t power(std::uint64_t p, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = out > UINT64_MAX / p ? UINT64_MAX : out * p;
  return out;
}

Rational inertia_sum(const WeightVector& w, int n, std::uint64_t p, const WminFormula& wmin) {
  Rational out = 0;
  for (const auto& [d, count] : units_by_order(p)) {
    const std::vector<int> sub = w.divisible_by(static_cast<int>(d));
    if (sub.empty()) continue;
    out += Rational(static_cast<unsigned long>(count)) * wmin(WeightVector(sub), n).specialize(Integer(static_cast<unsigned long>(p)));
  }
  return out;
}

}  // namespace

std::vector<CaseResult> poly_cases(std::uint64_t p, int dmax, const CensusConfig& cfg, std::uint64_t cap) {
  std::vector<CaseResult> out;
  CensusConfig c = cfg;
  c.p = p;
  const Integer q(static_cast<unsigned long>(p));
  const std::string ps = "p=" + std::to_string(p);
  for (int d1 = 0; d1 <= dmax; ++d1) {
    for (int d2 = 0; d2 <= dmax; ++d2) {
      const std::string dn = " d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      const std::string name = "poly1 " + ps + dn;
      if (power(p, d1 + d2) > cap) {
        out.push_back(skipped(name));
        continue;
      }
      const auto t = Clock::now();
      const Rational oracle(static_cast<unsigned long>(enumerate_poly(std::nullopt, d1, d2, c)));
      out.push_back(compare(name, poly1_motive(d1, d2).specialize(q), oracle, t));
    }
  }
  for (auto shape : {VanishingCondition::Shape::kAtLeastFirst, VanishingCondition::Shape::kAtLeastSecond,
                     VanishingCondition::Shape::kExact}) {
    for (int d1 = 1; d1 <= dmax; ++d1) {
      for (int d2 = 1; d2 <= dmax; ++d2) {
        for (int a = 1; a <= d1; ++a) {
          for (int b = 1; b <= d2; ++b) {
            const VanishingCondition g{shape, a, b};
            const std::string name = "poly" + g.to_string() + " " + ps + " d=(" + std::to_string(d1) +
                                     "," + std::to_string(d2) + ")";
            if (power(p, d1 + d2 - a - b) > cap) {
              out.push_back(skipped(name));
              continue;
            }
            const auto t = Clock::now();
            const Rational oracle(static_cast<unsigned long>(enumerate_poly(g, d1, d2, c)));
            out.push_back(compare(name, poly_cond_motive(g, d1, d2).specialize(q), oracle, t));
          }
        }
      }
    }
  }
  return out;
}

std::vector<CaseResult> wmin_weighted_cases(const std::vector<WminCase>& grid, const WminFormula& wmin,
                                            const CensusConfig& cfg) {
  std::vector<CaseResult> out;
  for (const WminCase& k : grid) {
    CensusConfig c = cfg;
    c.p = k.p;
    const auto t = Clock::now();
    const WeightVector w(k.weights);
    const CensusResult r = enumerate_wmin(w, k.n, c);
    out.push_back(compare("wmin " + weights_name(k.weights) + " n=" + std::to_string(k.n) +
                              " p=" + std::to_string(k.p),
                          wmin(w, k.n).specialize(Integer(static_cast<unsigned long>(k.p))), r.weighted, t));
  }
  return out;
}

std::vector<CaseResult> wmin_orbit_cases(const std::vector<WminCase>& grid, const WminFormula& wmin,
                                         const CensusConfig& cfg) {
  std::vector<CaseResult> out;
  for (const WminCase& k : grid) {
    CensusConfig c = cfg;
    c.p = k.p;
    const auto t = Clock::now();
    const WeightVector w(k.weights);
    const CensusResult r = enumerate_wmin(w, k.n, c);
    out.push_back(compare("inertia " + weights_name(k.weights) + " n=" + std::to_string(k.n) +
                              " p=" + std::to_string(k.p),
                          inertia_sum(w, k.n, k.p, wmin), Rational(r.orbits), t));
  }
  return out;
}

std::vector<CaseResult> stratum_cases(int l0, int l1, int n, std::uint64_t p,
                                      const std::vector<VanishingCondition>& gammas,
                                      const CensusConfig& cfg) {
  const std::vector<VanishingCondition> list =
      gammas.empty() ? realizable_conditions(WeightVector({l0, l1}), n) : gammas;
  CensusConfig c = cfg;
  c.p = p;
  std::vector<CaseResult> out;
  for (const VanishingCondition& g : list) {
    const auto t = Clock::now();
    const CensusResult r = enumerate_stratum(l0, l1, n, g, c);
    out.push_back(compare("stratum " + weights_name({l0, l1}) + " n=" + std::to_string(n) + " " +
                              g.to_string() + " p=" + std::to_string(p),
                          stratum_gamma_motive(l0, l1, n, g).specialize(Integer(static_cast<unsigned long>(p))),
                          r.weighted, t));
  }
  return out;
}

std::vector<CaseResult> count_cases(const std::vector<std::uint64_t>& qs, const std::vector<int>& ms) {
  std::vector<CaseResult> out;
  const auto add = [&](const CountResult& r, Clock::time_point t) {
    std::string name = "count q=" + std::to_string(r.q) + " m=" + std::to_string(r.m) + " " + to_string(r.mode);
    if (!r.theta.empty()) name += " " + r.theta;
    if (!r.closed) {
      out.push_back({name, "inapplicable", r.summed.get_str(), true, true, since(t)});
    } else {
      out.push_back(compare(name, *r.closed, r.summed, t));
    }
  };
  for (std::uint64_t q : qs) {
    for (int m : ms) {
      auto t = Clock::now();
      add(count_curves(q, m, CountMode::kWeighted), t);
      t = Clock::now();
      add(count_curves(q, m, CountMode::kUnweighted), t);
      for (const KodairaTheta& theta : kodaira_thetas()) {
        t = Clock::now();
        add(count_curves(q, m, CountMode::kKodaira, theta.name), t);
      }
    }
  }
  return out;
}

std::vector<CaseResult> symbolic_cases() {
  std::vector<CaseResult> out;
  const std::vector<std::vector<int>> weights = {{4, 6}, {2, 3}, {1, 1, 1}, {2, 4, 6}, {1, 5}};
  constexpr int kOrder = 6;
  for (const auto& w : weights) {
    const WeightVector wv(w);
    auto t = Clock::now();
    const bool ok = ambient_identity_check(wv, kOrder);
    out.push_back({"ambient identity " + wv.to_string() + " K=6", "true", ok ? "true" : "false", ok, false, since(t)});
    t = Clock::now();
    const MotiveSeries z = zeta_series(wv, kOrder);
    bool same = true;
    for (int k = 0; k <= kOrder; ++k) same = same && z[k] == wmin_motive(wv, k);
    out.push_back({"zeta coefficients " + wv.to_string() + " K=6", "wmin", same ? "wmin" : "differs", same, false, since(t)});
  }
  auto t = Clock::now();
  int mismatches = 0;
  int asym = 0;
  for (auto shape : {VanishingCondition::Shape::kAtLeastFirst, VanishingCondition::Shape::kAtLeastSecond,
                     VanishingCondition::Shape::kExact}) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = 1; b <= 4; ++b) {
        for (int d1 = a; d1 <= 8; ++d1) {
          for (int d2 = b; d2 <= 8; ++d2) {
            const VanishingCondition g{shape, a, b};
            const MotiveClass closed = poly_cond_motive(g, d1, d2);
            if (!(closed == poly_cond_motive_recursive(g, d1, d2))) ++mismatches;
            if (!closed.is_polynomial()) ++mismatches;
            if (shape == VanishingCondition::Shape::kAtLeastFirst &&
                !(closed == poly_cond_motive({VanishingCondition::Shape::kAtLeastSecond, b, a}, d2, d1))) {
              ++asym;
            }
          }
        }
      }
    }
  }
  out.push_back({"poly closed vs recursive a,b<=4 d<=8", "0", std::to_string(mismatches), mismatches == 0, false, since(t)});
  out.push_back({"poly symmetry a,b<=4 d<=8", "0", std::to_string(asym), asym == 0, false, since(t)});
  t = Clock::now();
  int nonpoly = 0;
  for (int n = 0; n <= 4; ++n) {
    for (const auto& w : weights) {
      if (!wmin_motive(WeightVector(w), n).is_polynomial()) ++nonpoly;
      for (std::uint64_t q : {5, 7, 11, 13}) {
        if (!inertia_wmin_motive(WeightVector(w), n, units_by_order(q)).is_polynomial()) ++nonpoly;
      }
    }
    for (const auto& pair : std::vector<std::vector<int>>{{4, 6}, {2, 3}, {1, 2}}) {
      for (const VanishingCondition& g : realizable_conditions(WeightVector(pair), n)) {
        if (!stratum_gamma_motive(pair[0], pair[1], n, g).is_polynomial()) ++nonpoly;
      }
    }
  }
  for (int d1 = 0; d1 <= 8; ++d1) {
    for (int d2 = 0; d2 <= 8; ++d2) {
      if (!poly1_motive(d1, d2).is_polynomial()) ++nonpoly;
    }
  }
  out.push_back({"classes are polynomials in L", "0", std::to_string(nonpoly), nonpoly == 0, false, since(t)});
  return out;
}

std::vector<WminCase> weighted_grid(const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
  std::vector<WminCase> out;
  const std::vector<std::pair<std::vector<int>, int>> base = {
      {{1, 1}, 2}, {{1, 2}, 1}, {{2, 3}, 1}, {{2, 2}, 1}};
  for (const auto& [w, nmax] : base) {
    for (std::uint64_t p : primes) {
      for (int n = 0; n <= nmax; ++n) {
        if (coefficient_space_size(p, WeightVector(w), n) <= cap) out.push_back({w, n, p});
      }
    }
  }
  return out;
}

std::vector<WminCase> orbit_grid(const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
  std::vector<WminCase> out = weighted_grid(primes, cap);
  const std::vector<std::pair<std::vector<int>, int>> extra = {{{4, 6}, 0}, {{4}, 1}, {{6}, 1}};
  for (const auto& [w, nmax] : extra) {
    for (std::uint64_t p : primes) {
      for (int n = 0; n <= nmax; ++n) {
        if (coefficient_space_size(p, WeightVector(w), n) <= cap) out.push_back({w, n, p});
      }
    }
  }
  return out;
}

std::vector<CaseResult> run_suite(const VerifyOptions& options) {
  constexpr std::uint64_t kCap = 2'000'000;
  std::vector<CaseResult> out;
  const auto append = [&](std::vector<CaseResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  append(wmin_weighted_cases(weighted_grid(options.primes, kCap), options.wmin, options.census));
  append(wmin_orbit_cases(orbit_grid(options.primes, kCap), options.wmin, options.census));
  for (std::uint64_t p : options.primes) append(poly_cases(p, 4, options.census, kCap));
  for (std::uint64_t p : options.primes) append(stratum_cases(2, 3, 1, p, {}, options.census));
  append(count_cases({5, 7, 11, 13}, {1, 2, 3}));
  append(symbolic_cases());
  const std::vector<VanishingCondition> heavy = {VanishingCondition::parse(">=1,1"),
                                                 VanishingCondition::parse("1,>=2"),
                                                 VanishingCondition::parse("2,3")};
  if (options.heavy) {
    CensusConfig c = options.census;
    c.force = true;
    append(stratum_cases(4, 6, 1, 5, heavy, c));
  } else {
    for (const VanishingCondition& g : heavy) out.push_back(skipped("stratum (4,6) n=1 " + g.to_string() + " p=5"));
  }
  return out;
}

std::optional<CaseResult> first_failure(const std::vector<CaseResult>& cases) {
  for (const CaseResult& c : cases) {
    if (!c.skipped && !c.match) return c;
  }
  return std::nullopt;
}

}  // namespace wps
