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

#include "wps/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wps/counting.hpp"
#include "wps/errors.hpp"
#include "wps/json_io.hpp"

namespace wps {

namespace {

struct Options {
  std::string input = "-";
  std::optional<std::uint64_t> p;
  std::vector<int> weights;
  int n = 0;
  std::string gamma;
  std::vector<int> poly;
  std::optional<std::uint64_t> q;
  int b_exp = 1;
  std::string mode = "weighted";
  std::string theta;
  unsigned workers = 1;
  std::uint64_t budget = CensusConfig{}.budget;
  std::uint64_t seed = 0;
  std::string suite = "core";
  std::vector<std::uint64_t> primes{5, 7};
  int order = MotiveSeries::kDefaultOrder;
  bool require_minimal = false;
  bool plain = false;
};

Json read_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError(path, "cannot open input file");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path == "-" ? "<stdin>" : path, e.what());
  }
}

std::string gamma_text(const std::vector<TwistDatum>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) {
    s += (i ? ", (" : "(") + std::to_string(g[i].r) + "," + std::to_string(g[i].a) + ")";
  }
  return s + "}";
}

Json gamma_json(const std::vector<TwistDatum>& g) {
  Json out = Json::array();
  for (const TwistDatum& t : g) out.push_back(to_json(t));
  return out;
}

void print_height(const HeightReport& r, std::ostream& out) {
  out << "ht = " << r.ht << "\nht_stable = " << r.ht_stable.get_str()
      << "\nisotrivial = " << (r.isotrivial ? "yes" : "no") << "\n";
  for (const LocalDatum& x : r.locals) {
    out << "  " << x.place.to_string() << "  m=" << x.m << "  (r,a)=(" << x.twist.r << "," << x.twist.a
        << ")  delta=" << x.delta.get_str() << "\n";
  }
  out << "Gamma = " << gamma_text(r.gamma()) << "\n";
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const WeierstrassModel model = model_from_json(read_input(o.input, in), o.p);
  const Classification c = classify_all(model, o.seed);
  const HeightReport h = height_report(model.series(), true);
  if (h.gamma() != c.gamma) throw std::logic_error("Gamma from the height report differs from the fiber types");
  if (o.plain) {
    for (const FiberReport& f : c.fibers) {
      out << f.place.to_string() << "  " << f.kodaira.to_string() << "  j=" << to_string(f.j);
      if (f.twist) out << "  (r,a)=(" << f.twist->r << "," << f.twist->a << ")";
      out << "\n";
    }
    out << "Gamma = " << gamma_text(c.gamma) << "\nisotrivial = " << (h.isotrivial ? "yes" : "no") << "\n";
    return kExitOk;
  }
  Json j = to_json(c);
  j["isotrivial"] = h.isotrivial;
  j["ht_stable"] = to_json(h.ht_stable);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_minimalize(const Options& o, std::istream& in, std::ostream& out) {
  const WeightedLinearSeries w = series_from_json(read_input(o.input, in), o.p);
  const Minimalization m = minimalize(w);
  const HeightReport r = height_report(m.minimal, true);
  if (o.plain) {
    out << "defect = " << m.defect << "\nh = " << m.h << "\n";
    for (std::size_t j = 0; j < m.minimal.forms().size(); ++j) out << "f" << j << " = " << m.minimal.form(j) << "\n";
    print_height(r, out);
    return kExitOk;
  }
  Json hj = to_json(r);
  hj["gamma"] = gamma_json(r.gamma());
  out << Json{{"minimal", to_json(m.minimal)}, {"h", to_json(m.h)}, {"defect", m.defect}, {"height", hj}}.dump(2)
      << "\n";
  return kExitOk;
}

int cmd_height(const Options& o, std::istream& in, std::ostream& out) {
  const WeightedLinearSeries w = series_from_json(read_input(o.input, in), o.p);
  const HeightReport r = height_report(w, o.require_minimal);
  if (o.plain) {
    print_height(r, out);
    return kExitOk;
  }
  Json j = to_json(r);
  j["gamma"] = gamma_json(r.gamma());
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_motive(const Options& o, std::ostream& out) {
  MotiveClass cls;
  std::string what;
  std::optional<MotiveClass> inertia;
  if (!o.poly.empty()) {
    if (o.poly.size() != 2) throw std::invalid_argument("--poly expects d1,d2");
    if (o.gamma.empty()) {
      cls = poly1_motive(o.poly[0], o.poly[1]);
      what = "Poly1";
    } else {
      const VanishingCondition g = VanishingCondition::parse(o.gamma);
      cls = poly_cond_motive(g, o.poly[0], o.poly[1]);
      what = "Poly" + g.to_string();
    }
    what += " degrees (" + std::to_string(o.poly[0]) + "," + std::to_string(o.poly[1]) + ")";
  } else {
    if (o.weights.empty()) throw std::invalid_argument("--weights or --poly is required");
    const WeightVector w(o.weights);
    if (o.gamma.empty()) {
      cls = wmin_motive(w, o.n);
      what = "Wmin " + w.to_string() + " n=" + std::to_string(o.n);
      if (o.q) inertia = inertia_wmin_motive(w, o.n, units_by_order(*o.q));
    } else {
      if (w.size() != 2) throw std::invalid_argument("--gamma needs two weights");
      const VanishingCondition g = VanishingCondition::parse(o.gamma);
      cls = stratum_gamma_motive(w[0], w[1], o.n, g);
      what = "W^" + g.to_string() + " " + w.to_string() + " n=" + std::to_string(o.n);
    }
  }
  const Integer q = o.q ? Integer(static_cast<unsigned long>(*o.q)) : Integer(0);
  if (o.plain) {
    out << what << "\n  class = " << cls.to_string() << "\n";
    if (o.q) out << "  at q=" << *o.q << ": " << cls.specialize(q).get_str() << "\n";
    if (inertia) {
      out << "  inertia class = " << inertia->to_string() << "\n  inertia at q=" << *o.q << ": "
          << inertia->specialize(q).get_str() << "\n";
    }
    return kExitOk;
  }
  Json j{{"object", what}, {"class", cls.to_string()}, {"motive", to_json(cls)}};
  if (o.q) {
    j["q"] = *o.q;
    j["value"] = to_json(cls.specialize(q));
  }
  if (inertia) {
    j["inertia_class"] = inertia->to_string();
    j["inertia_motive"] = to_json(*inertia);
    j["inertia_value"] = to_json(inertia->specialize(q));
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  if (o.weights.empty()) throw std::invalid_argument("--weights is required");
  if (o.order < 0 || o.order > 200) throw std::invalid_argument("--K must lie in [0, 200]");
  const WeightVector w(o.weights);
  const MotiveSeries z = zeta_series(w, o.order);
  const bool ambient = ambient_identity_check(w, o.order);
  const Integer q = o.q ? Integer(static_cast<unsigned long>(*o.q)) : Integer(0);
  if (o.plain) {
    out << "Z_" << w.to_string() << "(t) to order t^" << o.order << "\n";
    for (int k = 0; k <= o.order; ++k) {
      out << "  t^" << k << ": " << z[k].to_string();
      if (o.q) out << "  = " << z[k].specialize(q).get_str();
      out << "\n";
    }
    out << "ambient identity: " << (ambient ? "holds" : "FAILS") << "\n";
    return ambient ? kExitOk : kExitMismatch;
  }
  Json coeffs = Json::array();
  for (int k = 0; k <= o.order; ++k) {
    Json c{{"n", k}, {"class", z[k].to_string()}, {"motive", to_json(z[k])}};
    if (o.q) c["value"] = to_json(z[k].specialize(q));
    coeffs.push_back(c);
  }
  out << Json{{"weights", o.weights}, {"K", o.order}, {"coefficients", coeffs}, {"ambient_identity", ambient}}.dump(2)
      << "\n";
  return ambient ? kExitOk : kExitMismatch;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (!o.q) throw std::invalid_argument("--q is required");
  if (o.b_exp < 0 || o.b_exp > 1000) throw std::invalid_argument("--B-exp must lie in [0, 1000]");
  const CountMode mode = parse_count_mode(o.mode);
  if (mode == CountMode::kKodaira && o.theta.empty()) throw std::invalid_argument("--theta is required in kodaira mode");
  const CountResult r = count_curves(*o.q, o.b_exp, mode, o.theta);
  const bool ok = !r.closed || r.match();
  if (o.plain) {
    out << "N" << (mode == CountMode::kWeighted ? "^w" : "") << "(F_" << r.q << "(t)"
        << (r.theta.empty() ? "" : ", " + r.theta) << ", q^" << 12 * r.m << ")\n";
    for (const CountTerm& t : r.breakdown) out << "  " << t.label << " = " << t.value.get_str() << "\n";
    out << "  summed = " << r.summed.get_str() << "\n  closed = "
        << (r.closed ? r.closed->get_str() : std::string("inapplicable (m = 0)")) << "\n";
    if (mode == CountMode::kUnweighted) {
      out << "  delta(4) = " << delta_divides(4, r.q) << ", delta(6) = " << delta_divides(6, r.q) << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
  }
  Json j = to_json(r);
  if (mode == CountMode::kUnweighted) {
    const IntroConstants k = intro_constants(r.q);
    j["delta"] = {{"2", delta_divides(2, r.q)}, {"4", delta_divides(4, r.q)}, {"6", delta_divides(6, r.q)}};
    j["constants"] = {{"a", to_json(k.a)}, {"b", to_json(k.b)}, {"c", to_json(k.c)}, {"d", to_json(k.d)}};
  }
  out << j.dump(2) << "\n";
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.suite != "core" && o.suite != "heavy") throw std::invalid_argument("--suite must be core or heavy");
  VerifyOptions v;
  v.primes = o.primes;
  v.heavy = o.suite == "heavy";
  v.census.workers = o.workers;
  v.census.budget = o.budget;
  v.census.seed = o.seed;
  const std::vector<CaseResult> cases = run_suite(v);
  if (o.plain) {
    for (const CaseResult& c : cases) {
      out << (c.skipped ? "SKIP" : c.match ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.skipped) out << "  formula=" << c.formula_value << "  oracle=" << c.oracle_value;
      out << "\n";
    }
  } else {
    Json j = Json::array();
    for (const CaseResult& c : cases) j.push_back(to_json(c));
    out << j.dump(2) << "\n";
  }
  if (const auto bad = first_failure(cases)) {
    err << "first counterexample: " << bad->name << " formula=" << bad->formula_value
        << " oracle=" << bad->oracle_value << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heights, minimal models, Kodaira fibers and point counts on weighted projective stacks"};
  app.require_subcommand(1);
  Options o;

  auto field_opt = [&](CLI::App* c) { c->add_option("--p", o.p, "Prime field characteristic"); };
  auto input_opt = [&](CLI::App* c) { c->add_option("input", o.input, "JSON input file, - for stdin"); };
  auto plain_opt = [&](CLI::App* c) { c->add_flag("--plain", o.plain, "Human-readable output"); };

  CLI::App* classify = app.add_subcommand("classify", "Kodaira fibers of a Weierstrass model");
  input_opt(classify);
  field_opt(classify);
  classify->add_option("--seed", o.seed, "Seed for polynomial factorization");
  plain_opt(classify);

  CLI::App* minimal = app.add_subcommand("minimalize", "Minimal model of a weighted linear series");
  input_opt(minimal);
  field_opt(minimal);
  plain_opt(minimal);

  CLI::App* height = app.add_subcommand("height", "Height decomposition of a weighted linear series");
  input_opt(height);
  field_opt(height);
  height->add_flag("--require-minimal", o.require_minimal, "Refuse non-minimal input");
  plain_opt(height);

  CLI::App* motive = app.add_subcommand("motive", "Classes in the Grothendieck ring");
  motive->add_option("--weights", o.weights, "Weights, comma separated")->delimiter(',');
  motive->add_option("--n", o.n, "Height")->check(CLI::Range(0, 1000));
  motive->add_option("--gamma", o.gamma, "Vanishing condition such as \">=1,1\"");
  motive->add_option("--poly", o.poly, "Poly-space degrees d1,d2")->delimiter(',');
  motive->add_option("--q", o.q, "Specialize L to q");
  plain_opt(motive);

  CLI::App* zeta = app.add_subcommand("zeta", "Motivic height zeta series");
  zeta->add_option("--weights", o.weights, "Weights, comma separated")->delimiter(',')->required();
  zeta->add_option("--K", o.order, "Truncation order");
  zeta->add_option("--q", o.q, "Specialize L to q");
  plain_opt(zeta);

  CLI::App* count = app.add_subcommand("count", "Counting functions for elliptic curves over F_q(t)");
  count->add_option("--q", o.q, "Field size")->required();
  count->add_option("--B-exp", o.b_exp, "Exponent m with B = q^(12m)");
  count->add_option("--mode", o.mode, "weighted, unweighted or kodaira");
  count->add_option("--theta", o.theta, "Kodaira type: II III IV Ik* I0*j0 I0*j1728 IV* III* II*");
  plain_opt(count);

  CLI::App* verify = app.add_subcommand("verify", "Formulas against census oracles");
  verify->add_option("--suite", o.suite, "core or heavy");
  verify->add_option("--p", o.primes, "Primes for the census, comma separated")->delimiter(',');
  verify->add_option("--workers", o.workers, "Worker threads, 0 for all cores");
  verify->add_option("--budget", o.budget, "Largest coefficient box to enumerate");
  verify->add_option("--seed", o.seed, "Checksum seed");
  plain_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*classify) return cmd_classify(o, in, out);
    if (*minimal) return cmd_minimalize(o, in, out);
    if (*height) return cmd_height(o, in, out);
    if (*motive) return cmd_motive(o, out);
    if (*zeta) return cmd_zeta(o, out);
    if (*count) return cmd_count(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace wps
