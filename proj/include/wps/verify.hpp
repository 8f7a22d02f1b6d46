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

#ifndef WPS_VERIFY_HPP
#define WPS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wps/census.hpp"
#include "wps/motive.hpp"

namespace wps {

/// One formula-versus-oracle comparison.
struct CaseResult {
  std::string name;
  std::string formula_value;
  std::string oracle_value;
  bool match = false;
  bool skipped = false;
  double seconds = 0;
};

using WminFormula = std::function<MotiveClass(const WeightVector&, int)>;

struct WminCase {
  std::vector<int> weights;
  int n;
  std::uint64_t p;
};

/// Formula versus census for Poly_1 and all three conditioned shapes with
/// degrees up to dmax. Boxes above `cap` tuples are left out.
std::vector<CaseResult> poly_cases(std::uint64_t p, int dmax, const CensusConfig& cfg,
                                   std::uint64_t cap);

/// Weighted counts: the formula against enumerate_wmin.
std::vector<CaseResult> wmin_weighted_cases(const std::vector<WminCase>& grid, const WminFormula& wmin,
                                            const CensusConfig& cfg);
/// Unweighted counts: the inertia sum of the formula against Burnside orbits.
std::vector<CaseResult> wmin_orbit_cases(const std::vector<WminCase>& grid, const WminFormula& wmin,
                                         const CensusConfig& cfg);

/// Every realizable single-point condition, or the listed ones.
std::vector<CaseResult> stratum_cases(int l0, int l1, int n, std::uint64_t p,
                                      const std::vector<VanishingCondition>& gammas,
                                      const CensusConfig& cfg);

/// Closed forms against summations for all modes and types.
std::vector<CaseResult> count_cases(const std::vector<std::uint64_t>& qs, const std::vector<int>& ms);

/// Ambient identity, zeta coefficients and closed-form against recursive Poly classes.
std::vector<CaseResult> symbolic_cases();

/// (1,1) n <= 2, (1,2) n <= 1, (2,2) n <= 1 and (2,3) n <= 1, per prime,
/// keeping boxes of at most `cap` tuples.
std::vector<WminCase> weighted_grid(const std::vector<std::uint64_t>& primes, std::uint64_t cap);
/// weighted_grid plus (4,6) n = 0, (4) and (6) n <= 1 for the inertia terms.
std::vector<WminCase> orbit_grid(const std::vector<std::uint64_t>& primes, std::uint64_t cap);

struct VerifyOptions {
  std::vector<std::uint64_t> primes{5, 7};
  bool heavy = false;
  CensusConfig census;
  WminFormula wmin = [](const WeightVector& w, int n) { return wmin_motive(w, n); };
};

/// The core suite, plus the (4,6) stratum sweeps when `heavy` (reported as
/// skipped otherwise).
std::vector<CaseResult> run_suite(const VerifyOptions& options);

std::optional<CaseResult> first_failure(const std::vector<CaseResult>& cases);

}  // namespace wps

#endif  // WPS_VERIFY_HPP
