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

#include "wps/tate.hpp"

#include <algorithm>
#include <stdexcept>

#include "wps/errors.hpp"

namespace wps {

namespace {

int order(const BinaryForm& f, const Place& x) {
  return f.is_zero() ? kInfiniteOrder : valuation(f, x);
}

BinaryForm times(const BinaryForm& f, std::int64_t c) {
  return scale(f, f.field().reduce(c));
}

int forced_delta_order(const KodairaType& t) {
  switch (t.kind) {
    case Kodaira::kI0: return 0;
    case Kodaira::kIn: return t.k;
    case Kodaira::kII: return 2;
    case Kodaira::kIII: return 3;
    case Kodaira::kIV: return 4;
    case Kodaira::kI0Star: return 6;
    case Kodaira::kInStar: return 6 + t.k;
    case Kodaira::kIVStar: return 8;
    case Kodaira::kIIIStar: return 9;
    case Kodaira::kIIStar: return 10;
  }
  return -1;
}

}  // namespace

WeierstrassModel::WeierstrassModel(BinaryForm a4, BinaryForm a6, int n)
    : a4_(std::move(a4)), a6_(std::move(a6)), n_(n) {
  series();
}

WeierstrassModel::WeierstrassModel(const WeightedLinearSeries& w)
    : WeierstrassModel(w.form(0), w.form(1), w.height()) {
  if (!(w.weights() == WeightVector({4, 6}))) {
    throw std::invalid_argument("a Weierstrass model needs weights (4,6)");
  }
}

WeightedLinearSeries WeierstrassModel::series() const {
  return WeightedLinearSeries(a4_.field(), WeightVector({4, 6}), n_, {a4_, a6_});
}

std::string KodairaType::to_string() const {
  switch (kind) {
    case Kodaira::kI0: return "I0";
    case Kodaira::kIn: return "I" + std::to_string(k);
    case Kodaira::kII: return "II";
    case Kodaira::kIII: return "III";
    case Kodaira::kIV: return "IV";
    case Kodaira::kI0Star: return "I0*";
    case Kodaira::kInStar: return "I" + std::to_string(k) + "*";
    case Kodaira::kIVStar: return "IV*";
    case Kodaira::kIIIStar: return "III*";
    case Kodaira::kIIStar: return "II*";
  }
  return "?";
}

std::string to_string(JClass j) {
  switch (j) {
    case JClass::kZero: return "0";
    case JClass::k1728: return "1728";
    case JClass::kInfinity: return "inf";
    case JClass::kOther: return "other";
  }
  return "?";
}

DiscriminantJ discriminant_j(const WeierstrassModel& model) {
  const PrimeField& F = model.field();
  const int n = model.height();
  const BinaryForm zero12 = BinaryForm::zero(F);
  const BinaryForm a4c = model.a4().is_zero() ? zero12 : pow(model.a4(), 3);
  const BinaryForm a6s = model.a6().is_zero() ? zero12 : pow(model.a6(), 2);
  const BinaryForm den = times(a4c, 4) + times(a6s, 27);
  if (den.is_zero()) throw SingularModelError("discriminant vanishes identically; model is generically singular");
  if (den.degree() != 12 * n) throw std::logic_error("discriminant has unexpected degree");
  return {times(den, -16), times(a4c, 6912), den};
}

FiberReport classify_place(const WeierstrassModel& model, const Place& x) {
  const DiscriminantJ dj = discriminant_j(model);
  const int A = order(model.a4(), x);
  const int B = order(model.a6(), x);
  const int D = valuation(dj.delta, x);
  const long m = std::min(3L * A, 2L * B);
  if (m >= 12) {
    throw NonMinimalError("model is not minimal at " + x.to_string() + "; minimalize first");
  }

  FiberReport r{x, A, B, D, JClass::kOther, {}, std::nullopt};
  const int vnum = order(dj.j_num, x);
  const int vden = D;
  if (vnum > vden) {
    r.j = JClass::kZero;
  } else if (vden > vnum) {
    r.j = JClass::kInfinity;
  } else {
    // j - 1728 = -46656 a6^2 / den
    const long va6 = B == kInfiniteOrder ? kInfiniteOrder : 2L * B;
    r.j = va6 > vden ? JClass::k1728 : JClass::kOther;
  }

  KodairaType& t = r.kodaira;
  if (D == 0) {
    t = {Kodaira::kI0, 0};
  } else if (A == 0 || B == 0) {
    t = {Kodaira::kIn, D};
  } else if (B == 1) {
    t = {Kodaira::kII, 0};
  } else if (A == 1) {
    t = {Kodaira::kIII, 0};
  } else if (B == 2) {
    t = {Kodaira::kIV, 0};
  } else if (A == 2 && B == 3) {
    t = D == 6 ? KodairaType{Kodaira::kI0Star, 0} : KodairaType{Kodaira::kInStar, D - 6};
  } else if (B == 3 || A == 2) {
    t = {Kodaira::kI0Star, 0};
  } else if (B == 4) {
    t = {Kodaira::kIVStar, 0};
  } else if (A == 3) {
    t = {Kodaira::kIIIStar, 0};
  } else {
    t = {Kodaira::kIIStar, 0};
  }
  if (t.additive()) r.twist = twist_of_multiplicity(static_cast<int>(m), 12);
  if (forced_delta_order(t) != D) {
    throw std::logic_error("discriminant order " + std::to_string(D) + " contradicts type " +
                           t.to_string() + " at " + x.to_string());
  }
  return r;
}

Classification classify_all(const WeierstrassModel& model, std::uint64_t seed) {
  const WeightedLinearSeries w = model.series();
  if (!is_minimal(w)) throw NonMinimalError("model is not minimal; minimalize first");
  const DiscriminantJ dj = discriminant_j(model);
  Classification out;
  const Divisor bad = factor_divisor(dj.delta, seed);
  for (const DivisorTerm& term : bad.terms()) {
    FiberReport r = classify_place(model, term.place);
    out.delta_degree += r.nu_delta * term.place.degree();
    if (r.twist) out.gamma.insert(out.gamma.end(), static_cast<std::size_t>(term.place.degree()), *r.twist);
    out.fibers.push_back(std::move(r));
  }
  std::sort(out.gamma.begin(), out.gamma.end());
  if (out.delta_degree != 12 * model.height()) {
    throw std::logic_error("discriminant degree sum differs from 12n");
  }
  return out;
}

}  // namespace wps
