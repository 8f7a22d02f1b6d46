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

#include "wps/json_io.hpp"

#include <limits>

#include "wps/errors.hpp"

namespace wps {

namespace {

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::uint32_t> residues(const Json& j, const PrimeField& F, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of integers");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(F.reduce(integer(j[i], where + "[" + std::to_string(i) + "]")));
  }
  return out;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(where, "expected an integer");
}

Json twist_json(const std::optional<TwistDatum>& t) { return t ? to_json(*t) : Json(); }

}  // namespace

PrimeField field_from_json(const Json& j, const std::string& where) {
  const std::int64_t p = integer(member(j, "p", where), where + ".p");
  try {
    return PrimeField(static_cast<std::uint64_t>(p < 0 ? 0 : p));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ".p", e.what());
  }
}

BinaryForm form_from_json(const Json& j, const PrimeField& field, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected a binary form object");
  if (j.contains("zero")) {
    if (!j["zero"].is_boolean() || !j["zero"].get<bool>()) throw ParseError(where + ".zero", "expected true");
    return BinaryForm::zero(field);
  }
  const std::int64_t deg = integer(member(j, "deg", where), where + ".deg");
  if (deg < 0) throw ParseError(where + ".deg", "degree must be non-negative");
  std::vector<std::uint32_t> c = residues(member(j, "coeffs", where), field, where + ".coeffs");
  if (static_cast<std::int64_t>(c.size()) != deg + 1) {
    throw ParseError(where + ".coeffs", "expected " + std::to_string(deg + 1) + " coefficients, got " +
                                            std::to_string(c.size()));
  }
  return BinaryForm(field, static_cast<int>(deg), std::move(c));
}

Place place_from_json(const Json& j, const PrimeField& field, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Place::infinity(field);
    throw ParseError(where, "expected \"inf\" or a polynomial object");
  }
  std::vector<std::uint32_t> c = residues(member(j, "coeffs", where), field, where + ".coeffs");
  try {
    return Place::finite(FpPoly(field, std::move(c)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

WeightedLinearSeries series_from_json(const Json& j, std::optional<std::uint64_t> p) {
  const std::string where = "$";
  const PrimeField F = p ? PrimeField(*p) : field_from_json(j, where);
  const Json& wj = member(j, "weights", where);
  if (!wj.is_array() || wj.empty()) throw ParseError("$.weights", "expected a non-empty array");
  std::vector<int> weights;
  for (std::size_t i = 0; i < wj.size(); ++i) {
    const std::int64_t w = integer(wj[i], "$.weights[" + std::to_string(i) + "]");
    if (w <= 0 || w > 1'000'000) throw ParseError("$.weights[" + std::to_string(i) + "]", "weight out of range");
    weights.push_back(static_cast<int>(w));
  }
  const std::int64_t n = integer(member(j, "n", where), "$.n");
  if (n < 0 || n > 1'000'000) throw ParseError("$.n", "height out of range");
  const Json& fj = member(j, "forms", where);
  if (!fj.is_array()) throw ParseError("$.forms", "expected an array");
  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    forms.push_back(form_from_json(fj[i], F, "$.forms[" + std::to_string(i) + "]"));
  }
  try {
    return WeightedLinearSeries(F, WeightVector(weights), static_cast<int>(n), std::move(forms));
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

WeierstrassModel model_from_json(const Json& j, std::optional<std::uint64_t> p) {
  if (j.is_object() && j.contains("weights")) {
    const WeightedLinearSeries w = series_from_json(j, p);
    if (!(w.weights() == WeightVector({4, 6}))) throw ParseError("$.weights", "a Weierstrass model needs weights [4,6]");
    return WeierstrassModel(w);
  }
  const PrimeField F = p ? PrimeField(*p) : field_from_json(j, "$");
  const std::int64_t n = integer(member(j, "n", "$"), "$.n");
  if (n < 0 || n > 1'000'000) throw ParseError("$.n", "height out of range");
  BinaryForm a4 = form_from_json(member(j, "a4", "$"), F, "$.a4");
  BinaryForm a6 = form_from_json(member(j, "a6", "$"), F, "$.a6");
  try {
    return WeierstrassModel(std::move(a4), std::move(a6), static_cast<int>(n));
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

MotiveClass motive_from_json(const Json& j, const std::string& where) {
  const auto poly = [&](const char* key) {
    const Json& a = member(j, key, where);
    if (!a.is_array()) throw ParseError(where + "." + key, "expected an array");
    std::vector<Integer> c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      c.push_back(integer_from(a[i], where + "." + key + "[" + std::to_string(i) + "]"));
    }
    return ZPoly(std::move(c));
  };
  ZPoly den = poly("den");
  if (den.is_zero()) throw ParseError(where + ".den", "zero denominator");
  return MotiveClass(poly("num"), std::move(den));
}

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const BinaryForm& f) {
  if (f.is_zero()) return Json{{"zero", true}};
  return Json{{"deg", f.degree()}, {"coeffs", f.coeffs()}};
}

Json to_json(const Place& x) {
  if (x.is_infinity()) return "inf";
  return Json{{"coeffs", x.poly().coeffs()}};
}

Json to_json(const Divisor& d) {
  Json out = Json::array();
  for (const DivisorTerm& t : d.terms()) out.push_back({{"place", to_json(t.place)}, {"multiplicity", t.multiplicity}});
  return out;
}

Json to_json(const TwistDatum& t) { return Json::array({t.r, t.a}); }

Json to_json(const WeightedLinearSeries& w) {
  Json forms = Json::array();
  for (const BinaryForm& f : w.forms()) forms.push_back(to_json(f));
  return Json{{"p", w.field().p()}, {"weights", w.weights().weights()}, {"n", w.height()}, {"forms", forms}};
}

Json to_json(const HeightReport& r) {
  Json locals = Json::array();
  for (const LocalDatum& x : r.locals) {
    locals.push_back({{"place", to_json(x.place)},
                      {"m", x.m},
                      {"r", x.twist.r},
                      {"a", x.twist.a},
                      {"delta", to_json(x.delta)}});
  }
  return Json{{"ht", r.ht}, {"ht_stable", to_json(r.ht_stable)}, {"locals", locals}, {"isotrivial", r.isotrivial}};
}

Json to_json(const FiberReport& r) {
  const auto nu = [](int v) { return v == kInfiniteOrder ? Json("inf") : Json(v); };
  Json out{{"place", to_json(r.place)},
           {"nu", Json::array({nu(r.nu_a4), nu(r.nu_a6), nu(r.nu_delta)})},
           {"j", to_string(r.j)},
           {"type", r.kodaira.to_string()}};
  if (r.kodaira.kind == Kodaira::kIn || r.kodaira.kind == Kodaira::kInStar) out["k"] = r.kodaira.k;
  if (r.twist) out["twist"] = twist_json(r.twist);
  return out;
}

Json to_json(const Classification& c) {
  Json fibers = Json::array();
  for (const FiberReport& f : c.fibers) fibers.push_back(to_json(f));
  Json gamma = Json::array();
  for (const TwistDatum& t : c.gamma) gamma.push_back(to_json(t));
  return Json{{"fibers", fibers}, {"gamma", gamma}, {"delta_degree", c.delta_degree}};
}

Json to_json(const MotiveClass& m) {
  Json num = Json::array();
  Json den = Json::array();
  for (const Integer& c : m.num().coeffs()) num.push_back(integer_json(c));
  for (const Integer& c : m.den().coeffs()) den.push_back(integer_json(c));
  return Json{{"num", num}, {"den", den}};
}

Json to_json(const CensusResult& r) {
  return Json{{"raw", r.raw},
              {"weighted", to_json(r.weighted)},
              {"orbits", r.orbits.get_str()},
              {"checksum", r.checksum},
              {"scanned", r.scanned},
              {"chunks", r.chunks},
              {"workers", r.workers},
              {"heavy", r.heavy},
              {"seconds", r.seconds}};
}

Json to_json(const CountResult& r) {
  Json breakdown = Json::array();
  for (const CountTerm& t : r.breakdown) breakdown.push_back({{"term", t.label}, {"value", to_json(t.value)}});
  Json out{{"q", r.q}, {"B", "q^" + std::to_string(12 * r.m)}, {"m", r.m}, {"mode", to_string(r.mode)}};
  if (!r.theta.empty()) out["theta"] = r.theta;
  out["summed"] = to_json(r.summed);
  out["closed"] = r.closed ? to_json(*r.closed) : Json("inapplicable");
  out["match"] = r.match();
  out["breakdown"] = breakdown;
  return out;
}

Json to_json(const CaseResult& r) {
  return Json{{"case", r.name},
              {"formula_value", r.formula_value},
              {"oracle_value", r.oracle_value},
              {"match", r.skipped ? Json("skipped") : Json(r.match)},
              {"seconds", r.seconds}};
}

}  // namespace wps
