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

#ifndef WPS_CENSUS_HPP
#define WPS_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "wps/ffield.hpp"
#include "wps/rational.hpp"
#include "wps/wls.hpp"

namespace wps {

struct CensusConfig {
  std::uint64_t p = 5;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned workers = 1;
  /// Tuples per work unit.
  std::uint64_t chunk_size = std::uint64_t{1} << 14;
  /// Largest coefficient box scanned without `force`.
  std::uint64_t budget = 200'000'000;
  bool force = false;
  std::uint64_t seed = 0;
};

struct CensusResult {
  /// Qualifying coefficient tuples.
  std::uint64_t raw = 0;
  /// raw / (p - 1), or (p + 1) raw / (p - 1) for a stratum fiber.
  Rational weighted;
  /// Burnside orbit count under the weighted unit action.
  Integer orbits;
  /// Order-independent hash of the qualifying tuple indices.
  std::uint64_t checksum = 0;
  /// Size of the scanned coefficient box.
  std::uint64_t scanned = 0;
  std::uint64_t chunks = 0;
  unsigned workers = 1;
  bool heavy = false;
  double seconds = 0;
};

/// Minimal tuples (f_0..f_N) of degrees lambda_j n, not all zero.
CensusResult enumerate_wmin(const WeightVector& weights, int n, const CensusConfig& cfg);

/// Orbits of minimal tuples counted by deduplicating canonical representatives.
Integer enumerate_wmin_orbits_explicit(const WeightVector& weights, int n, const CensusConfig& cfg);

/// Monic pairs of degrees (d1, d2). Without a condition the pair must be
/// coprime; with one, 0 must be the only common root and the orders at 0
/// must satisfy it.
std::uint64_t enumerate_poly(const std::optional<VanishingCondition>& gamma, int d1, int d2,
                             const CensusConfig& cfg);

/// Pairs whose normalized base locus is exactly the point t = 0, with
/// orders of type gamma there; weighted is (p + 1) raw / (p - 1).
CensusResult enumerate_stratum(int l0, int l1, int n, const VanishingCondition& gamma,
                               const CensusConfig& cfg);

/// Calls `fn` on every tuple with some nonzero form, in index order.
void for_each_series(const PrimeField& field, const WeightVector& weights, int n,
                     const std::function<void(const WeightedLinearSeries&)>& fn);

/// p^(sum_j (lambda_j n + 1)), saturating at UINT64_MAX.
std::uint64_t coefficient_space_size(std::uint64_t p, const WeightVector& weights, int n);

}  // namespace wps

#endif  // WPS_CENSUS_HPP
