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

#ifndef WPS_TESTS_SUPPORT_HPP
#define WPS_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "wps/binform.hpp"
#include "wps/wls.hpp"

namespace wps::testing {

using Rng = std::mt19937_64;

inline std::uint32_t residue(Rng& rng, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng));
}

inline BinaryForm random_form(const PrimeField& F, int deg, Rng& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = residue(rng, F.p());
  return BinaryForm(F, deg, std::move(c));
}

inline BinaryForm random_nonzero_form(const PrimeField& F, int deg, Rng& rng) {
  for (;;) {
    BinaryForm f = random_form(F, deg, rng);
    if (!f.is_zero()) return f;
  }
}

inline WeightedLinearSeries random_series(const PrimeField& F, const WeightVector& w, int n, Rng& rng) {
  for (;;) {
    std::vector<BinaryForm> forms;
    bool any = false;
    for (int lambda : w.weights()) {
      forms.push_back(random_form(F, lambda * n, rng));
      any = any || !forms.back().is_zero();
    }
    if (any) return WeightedLinearSeries(F, w, n, std::move(forms));
  }
}

}  // namespace wps::testing

#endif  // WPS_TESTS_SUPPORT_HPP
