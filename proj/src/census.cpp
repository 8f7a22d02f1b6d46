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

#include "wps/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "wps/errors.hpp"

namespace wps {

namespace {

constexpr int kMaxLen = 64;
constexpr int kMaxForms = 8;

using Coeffs = std::array<std::uint32_t, kMaxLen>;

struct Tuple {
  std::array<Coeffs, kMaxForms> c{};
  std::array<int, kMaxForms> len{};
  int forms = 0;
};

int top_degree(const std::uint32_t* c, int len) {
  int d = len - 1;
  while (d >= 0 && c[d] == 0) --d;
  return d;
}

int low_order(const std::uint32_t* c, int len) {
  for (int i = 0; i < len; ++i) {
    if (c[i] != 0) return i;
  }
  return -1;
}

class Kernel {
 public:
  explicit Kernel(std::uint32_t p) : p_(p), inv_(p, 0), binom_(kMaxLen * kMaxLen, 0) {
    const PrimeField F(p);
    for (std::uint32_t a = 1; a < p; ++a) inv_[a] = F.inv(a);
    for (int k = 0; k < kMaxLen; ++k) {
      binom_[k * kMaxLen] = 1 % p;
      for (int i = 1; i <= k; ++i) {
        binom_[k * kMaxLen + i] = (binom_[(k - 1) * kMaxLen + i - 1] + binom_[(k - 1) * kMaxLen + i]) % p;
      }
    }
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }

  /// i-th Hasse derivative of c[0..d] into out; returns its degree.
  int hasse(const std::uint32_t* c, int d, int i, std::uint32_t* out) const {
    int top = -1;
    for (int k = i; k <= d; ++k) {
      out[k - i] = mul(binom_[k * kMaxLen + i], c[k]);
      if (out[k - i] != 0) top = k - i;
    }
    return top;
  }

  /// Monic gcd of a and b (both consumed) left in a; returns its degree.
  int gcd(std::uint32_t* a, int da, std::uint32_t* b, int db) const {
    std::uint32_t* x = a;
    std::uint32_t* y = b;
    while (db >= 0) {
      da = rem(x, da, y, db);
      std::swap(x, y);
      std::swap(da, db);
    }
    if (da >= 0) {
      const std::uint32_t il = inv_[x[da]];
      for (int i = 0; i <= da; ++i) a[i] = mul(x[i], il);
    }
    return da;
  }

 private:
  int rem(std::uint32_t* a, int da, const std::uint32_t* b, int db) const {
    const std::uint32_t ib = inv_[b[db]];
    while (da >= db) {
      const std::uint32_t f = mul(a[da], ib);
      const int shift = da - db;
      for (int i = 0; i < db; ++i) {
        const std::uint32_t t = mul(f, b[i]);
        std::uint32_t& v = a[shift + i];
        v = v >= t ? v - t : v + p_ - t;
      }
      a[da] = 0;
      --da;
      while (da >= 0 && a[da] == 0) --da;
    }
    return da;
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> binom_;
};

struct Slot {
  int form;
  int index;
};

struct Box {
  Tuple base;
  std::vector<Slot> free;
};

struct Totals {
  std::uint64_t raw = 0;
  std::uint64_t burnside = 0;
  std::uint64_t checksum = 0;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t checked_power(std::uint64_t p, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / p) return UINT64_MAX;
    out *= p;
  }
  return out;
}

void check_census_field(std::uint64_t p) {
  PrimeField check(p);
  if (p > 65536) throw std::invalid_argument("census supports p below 65536 only");
}

Box make_box(const WeightVector& w, int n) {
  if (static_cast<int>(w.size()) > kMaxForms) throw std::invalid_argument("too many weights for the census");
  Box box;
  box.base.forms = static_cast<int>(w.size());
  for (int j = 0; j < box.base.forms; ++j) {
    const int len = w[j] * n + 1;
    if (len > kMaxLen) throw std::invalid_argument("form degree too large for the census");
    box.base.len[j] = len;
    for (int i = 0; i < len; ++i) box.free.push_back({j, i});
  }
  return box;
}

template <typename Eval>
Totals run_box(const Box& box, std::uint32_t p, const CensusConfig& cfg, Eval eval,
               CensusResult& meta) {
  const std::uint64_t total = checked_power(p, box.free.size());
  meta.scanned = total;
  meta.heavy = total > cfg.budget;
  if (meta.heavy && !cfg.force) {
    throw BudgetExceeded("coefficient box of size " +
                         (total == UINT64_MAX ? std::string("> 2^64") : std::to_string(total)) +
                         " exceeds the budget " + std::to_string(cfg.budget));
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(cfg.chunk_size, 1);
  const std::uint64_t nchunks = total / chunk + (total % chunk ? 1 : 0);
  std::vector<Totals> parts(nchunks);
  std::atomic<std::uint64_t> next{0};
  const std::size_t nd = box.free.size();

  auto worker = [&]() {
    std::vector<std::uint32_t> digit(nd);
    for (std::uint64_t c = next++; c < nchunks; c = next++) {
      const std::uint64_t lo = c * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      Tuple t = box.base;
      std::uint64_t rest = lo;
      for (std::size_t k = 0; k < nd; ++k) {
        digit[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
        t.c[box.free[k].form][box.free[k].index] = digit[k];
      }
      Totals acc;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const long fixed = eval(t);
        if (fixed >= 0) {
          ++acc.raw;
          acc.burnside += static_cast<std::uint64_t>(fixed);
          acc.checksum += mix(idx ^ cfg.seed);
        }
        for (std::size_t k = 0; k < nd; ++k) {
          const Slot& s = box.free[k];
          if (++digit[k] < p) {
            t.c[s.form][s.index] = digit[k];
            break;
          }
          digit[k] = 0;
          t.c[s.form][s.index] = 0;
        }
      }
      parts[c] = acc;
    }
  };

  unsigned workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(nchunks, 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  meta.workers = workers;
  meta.chunks = nchunks;

  Totals sum;
  for (const Totals& part : parts) {
    sum.raw += part.raw;
    sum.burnside += part.burnside;
    sum.checksum += part.checksum;
  }
  return sum;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint64_t coefficient_space_size(std::uint64_t p, const WeightVector& weights, int n) {
  std::size_t e = 0;
  for (int w : weights.weights()) e += static_cast<std::size_t>(w * n + 1);
  return checked_power(p, e);
}

CensusResult enumerate_wmin(const WeightVector& weights, int n, const CensusConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_census_field(cfg.p);
  if (n < 0) throw std::invalid_argument("height must be non-negative");
  const auto p = static_cast<std::uint32_t>(cfg.p);
  const Kernel kernel(p);
  const Box box = make_box(weights, n);
  const int forms = box.base.forms;

  std::vector<long> fixed(std::size_t{1} << forms, 0);
  for (std::size_t mask = 1; mask < fixed.size(); ++mask) {
    std::uint64_t g = 0;
    for (int j = 0; j < forms; ++j) {
      if (mask >> j & 1U) g = std::gcd(g, static_cast<std::uint64_t>(weights[j]));
    }
    fixed[mask] = static_cast<long>(std::gcd(g, cfg.p - 1));
  }
  std::array<int, kMaxForms> lambda{};
  for (int j = 0; j < forms; ++j) lambda[j] = weights[j];

  auto eval = [&](const Tuple& t) -> long {
    std::array<int, kMaxForms> deg{};
    unsigned mask = 0;
    for (int j = 0; j < forms; ++j) {
      deg[j] = top_degree(t.c[j].data(), t.len[j]);
      if (deg[j] >= 0) mask |= 1U << j;
    }
    if (mask == 0) return -1;
    bool at_infinity = true;
    for (int j = 0; j < forms && at_infinity; ++j) {
      if ((mask >> j & 1U) && deg[j] > t.len[j] - 1 - lambda[j]) at_infinity = false;
    }
    if (at_infinity) return -1;

    Coeffs g{};
    Coeffs h{};
    int gd = -2;
    for (int j = 0; j < forms; ++j) {
      if (!(mask >> j & 1U)) continue;
      for (int i = lambda[j] - 1; i >= 0; --i) {
        if (deg[j] < i) continue;
        if (gd == -2) {
          gd = kernel.hasse(t.c[j].data(), deg[j], i, g.data());
          if (gd < 0) gd = -2;
        } else {
          const int hd = kernel.hasse(t.c[j].data(), deg[j], i, h.data());
          if (hd < 0) continue;
          gd = kernel.gcd(g.data(), gd, h.data(), hd);
        }
        if (gd == 0) return fixed[mask];
      }
    }
    return gd >= 1 ? -1 : fixed[mask];
  };

  CensusResult out;
  const Totals totals = run_box(box, p, cfg, eval, out);
  out.raw = totals.raw;
  out.weighted = Rational(Integer(static_cast<unsigned long>(totals.raw)), Integer(static_cast<unsigned long>(p - 1)));
  out.weighted.canonicalize();
  const Integer burn(static_cast<unsigned long>(totals.burnside));
  if (burn % (p - 1) != 0) throw std::logic_error("Burnside sum is not divisible by p - 1");
  out.orbits = burn / (p - 1);
  out.checksum = totals.checksum;
  out.seconds = seconds_since(start);
  return out;
}

Integer enumerate_wmin_orbits_explicit(const WeightVector& weights, int n, const CensusConfig& cfg) {
  check_census_field(cfg.p);
  const std::uint64_t size = coefficient_space_size(cfg.p, weights, n);
  if (size > cfg.budget && !cfg.force) {
    throw BudgetExceeded("coefficient box exceeds the budget");
  }
  std::set<std::vector<std::vector<std::uint32_t>>> seen;
  for_each_series(PrimeField(cfg.p), weights, n, [&](const WeightedLinearSeries& w) {
    if (!is_minimal(w)) return;
    const WeightedLinearSeries rep = canonical_representative(w);
    std::vector<std::vector<std::uint32_t>> key;
    for (const BinaryForm& f : rep.forms()) key.push_back(f.coeffs());
    seen.insert(std::move(key));
  });
  return Integer(static_cast<unsigned long>(seen.size()));
}

std::uint64_t enumerate_poly(const std::optional<VanishingCondition>& gamma, int d1, int d2,
                             const CensusConfig& cfg) {
  check_census_field(cfg.p);
  if (d1 < 0 || d2 < 0 || d1 + 1 > kMaxLen || d2 + 1 > kMaxLen) {
    throw std::invalid_argument("degrees out of range");
  }
  const auto p = static_cast<std::uint32_t>(cfg.p);
  const Kernel kernel(p);
  Box box;
  box.base.forms = 2;
  const int deg[2] = {d1, d2};
  int forced[2] = {0, 0};
  if (gamma) {
    if (gamma->a > d1 || gamma->b > d2) return 0;
    forced[0] = gamma->a;
    forced[1] = gamma->b;
  }
  for (int j = 0; j < 2; ++j) {
    box.base.len[j] = deg[j] + 1;
    box.base.c[j][deg[j]] = 1;
    for (int i = forced[j]; i < deg[j]; ++i) box.free.push_back({j, i});
  }

  auto eval = [&](const Tuple& t) -> long {
    Coeffs a = t.c[0];
    Coeffs b = t.c[1];
    if (!gamma) return kernel.gcd(a.data(), d1, b.data(), d2) == 0 ? 0 : -1;
    if (!gamma->admits(low_order(t.c[0].data(), d1 + 1), low_order(t.c[1].data(), d2 + 1))) return -1;
    const int gd = kernel.gcd(a.data(), d1, b.data(), d2);
    for (int i = 0; i < gd; ++i) {
      if (a[i] != 0) return -1;
    }
    return 0;
  };
  CensusResult meta;
  return run_box(box, p, cfg, eval, meta).raw;
}

CensusResult enumerate_stratum(int l0, int l1, int n, const VanishingCondition& gamma,
                               const CensusConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_census_field(cfg.p);
  const WeightVector weights({l0, l1});
  if (!is_realizable(gamma, weights, n)) {
    throw std::invalid_argument("condition " + gamma.to_string() + " is not realizable for " +
                                weights.to_string() + " at height " + std::to_string(n));
  }
  const auto p = static_cast<std::uint32_t>(cfg.p);
  const Kernel kernel(p);
  Box box;
  box.base.forms = 2;
  const int forced[2] = {gamma.a, gamma.b};
  for (int j = 0; j < 2; ++j) {
    const int len = weights[j] * n + 1;
    if (len > kMaxLen) throw std::invalid_argument("form degree too large for the census");
    box.base.len[j] = len;
    for (int i = forced[j]; i < len; ++i) box.free.push_back({j, i});
  }
  const int kappa = weights.kappa();
  const int cof[2] = {weights.cofactor(0), weights.cofactor(1)};

  auto eval = [&](const Tuple& t) -> long {
    int nu[2];
    int deg[2];
    for (int j = 0; j < 2; ++j) {
      nu[j] = low_order(t.c[j].data(), t.len[j]);
      deg[j] = top_degree(t.c[j].data(), t.len[j]);
    }
    if (nu[0] < 0 && nu[1] < 0) return -1;
    if (!gamma.admits(nu[0], nu[1])) return -1;
    int m = kappa;
    for (int j = 0; j < 2; ++j) {
      if (nu[j] >= 0) m = std::min(m, cof[j] * nu[j]);
    }
    if (m >= kappa) return -1;
    bool at_infinity = true;
    for (int j = 0; j < 2; ++j) {
      if (nu[j] >= 0 && deg[j] == t.len[j] - 1) at_infinity = false;
    }
    if (at_infinity) return -1;
    Coeffs a = t.c[0];
    Coeffs b = t.c[1];
    int gd;
    if (nu[0] < 0) {
      gd = deg[1];
      a = b;
    } else if (nu[1] < 0) {
      gd = deg[0];
    } else {
      gd = kernel.gcd(a.data(), deg[0], b.data(), deg[1]);
    }
    for (int i = 0; i < gd; ++i) {
      if (a[i] != 0) return -1;
    }
    return 0;
  };

  CensusResult out;
  const Totals totals = run_box(box, p, cfg, eval, out);
  out.raw = totals.raw;
  out.weighted = Rational(Integer(static_cast<unsigned long>(totals.raw)) * (p + 1),
                          Integer(static_cast<unsigned long>(p - 1)));
  out.weighted.canonicalize();
  out.checksum = totals.checksum;
  out.seconds = seconds_since(start);
  return out;
}

void for_each_series(const PrimeField& field, const WeightVector& weights, int n,
                     const std::function<void(const WeightedLinearSeries&)>& fn) {
  const std::uint32_t p = field.p();
  std::vector<std::vector<std::uint32_t>> c;
  for (int w : weights.weights()) c.emplace_back(static_cast<std::size_t>(w * n + 1), 0);
  while (true) {
    bool any = false;
    for (const auto& f : c) {
      for (std::uint32_t x : f) any = any || x != 0;
    }
    if (any) {
      std::vector<BinaryForm> forms;
      for (std::size_t j = 0; j < c.size(); ++j) {
        forms.emplace_back(field, weights[j] * n, c[j]);
      }
      fn(WeightedLinearSeries(field, weights, n, std::move(forms)));
    }
    bool carried = true;
    for (std::size_t j = 0; j < c.size() && carried; ++j) {
      for (std::size_t i = 0; i < c[j].size() && carried; ++i) {
        if (++c[j][i] < p) {
          carried = false;
        } else {
          c[j][i] = 0;
        }
      }
    }
    if (carried) return;
  }
}

}  // namespace wps
