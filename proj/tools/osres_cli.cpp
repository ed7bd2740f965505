// Copyright 2026 The Authors.
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

// Command-line front end. Exit codes: 0 success, 1 failed verification,
// 2 parse error, 3 precondition violation.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "osres/acceptance.hpp"
#include "osres/arrangement.hpp"
#include "osres/bgg.hpp"
#include "osres/groebner.hpp"
#include "osres/io.hpp"
#include "osres/local_systems.hpp"
#include "osres/resolution.hpp"
#include "osres/squarefree.hpp"

using namespace osres;

namespace {

struct Session {
  std::string field_text = "Q";
  Field field = Field::rationals();
  int steps = 4;
  int max_degree = 8;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "text";
  std::string order;
  int decone = 0;
  bool cone = false;
  std::string e;
  std::string module = "homology";
  bool lex = false;
  std::string suite = "all";
  int samples = 100;
  std::string input;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string mask_text(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (!(m >> i & 1)) continue;
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

Json masks_json(const std::vector<Mask>& ms) {
  Json out = Json::array();
  for (Mask m : ms) {
    Json s = Json::array();
    for (int i = 0; i < kMaxVariables; ++i) {
      if (m >> i & 1) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

std::string vec_text(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

Arrangement load_arrangement(const Session& s) {
  Arrangement a = arrangement_from_json(read_json_file(s.input));
  if (s.decone > 0) {
    if (s.decone > a.size()) throw PreconditionError("--decone index out of range");
    a = decone(a, s.decone - 1);
  }
  if (s.cone) a = cone(a);
  return a;
}

GradedModule os_algebra(const Arrangement& a, Field k) {
  return quotient_module(k, a.size(), os_ideal(a, k));
}

// Parses "3,1,2" (1-based) into a ranking list, largest first.
std::vector<int> parse_permutation(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoi(tok) - 1);
    } catch (const std::exception&) {
      throw ParseError("bad --order entry: " + tok);
    }
  }
  if (static_cast<int>(out.size()) != n) throw ParseError("--order must list all variables");
  return out;
}

std::vector<Scalar> parse_vector(Field k, const std::string& text, int n) {
  std::vector<Scalar> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(k.parse_scalar(tok));
  if (static_cast<int>(out.size()) != n) throw ParseError("--e needs " + std::to_string(n) + " entries");
  return out;
}

void emit(const Session& s, const std::string& command, const Json& payload, const std::string& text) {
  if (s.format == "json") {
    Json out;
    out["command"] = command;
    out["input"] = s.input;
    out["field"] = s.field.to_string();
    out["payload"] = payload;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  }
}

void cmd_os_ideal(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const auto gens = os_ideal(a, s.field);
  std::vector<int> order;
  if (!s.order.empty()) {
    const auto ranking = parse_permutation(s.order, a.size());
    // ranking lists largest first; broken_circuits wants ranks with smaller = smaller.
    order.assign(a.size(), 0);
    for (int r = 0; r < a.size(); ++r) order[ranking[r]] = a.size() - 1 - r;
  }
  const auto bc = broken_circuits(a, order);
  Json g = Json::array();
  std::string text;
  for (const auto& x : gens) {
    g.push_back(x.to_string());
    text += x.to_string() + "\n";
  }
  text += "broken circuits:";
  for (Mask m : bc) text += " " + mask_text(m);
  emit(s, "os-ideal", Json{{"generators", g}, {"broken_circuits", masks_json(bc)}}, text);
}

void cmd_circuits(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const CircuitData c = circuits(a);
  std::string text = "dependent:";
  for (Mask m : c.dependent_circuits) text += " " + mask_text(m);
  text += "\nempty:";
  for (Mask m : c.empty_min_sets) text += " " + mask_text(m);
  emit(s, "circuits",
       Json{{"dependent_circuits", masks_json(c.dependent_circuits)},
            {"empty_min_sets", masks_json(c.empty_min_sets)}},
       text);
}

void cmd_char_poly(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const IntPoly p = char_poly(a);
  emit(s, "char-poly", Json{{"coefficients", p.coeffs()}, {"text", p.to_string()}}, p.to_string());
}

void cmd_betti(const Session& s) {
  const Arrangement a = load_arrangement(s);
  GradedModule m = os_algebra(a, s.field);
  int start = 0;
  if (s.module == "homology") {
    const HomologyModule h = homology_module(a, s.field);
    m = h.module;
    start = h.start;
  } else if (s.module == "ideal") {
    m = ideal_module(s.field, a.size(), os_ideal(a, s.field));
    start = m.is_zero() ? 0 : m.min_degree();
  } else if (s.module != "algebra") {
    throw ParseError("--module must be homology, ideal or algebra");
  }
  const BettiTable b = betti_table(m, s.steps);
  std::vector<std::int64_t> tot;
  for (int i = 0; i < b.length(); ++i) tot.push_back(b.total(i));
  emit(s, "betti", Json{{"module", s.module}, {"table", betti_to_json(b, start)}, {"totals", tot}},
       b.to_string() + "totals: " + vec_text(tot));
}

void cmd_check_linear(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const HomologyModule h = homology_module(a, s.field);
  const BettiTable b = betti_table(h.module, s.steps);
  const bool linear = is_linear(b, h.start);
  std::vector<std::int64_t> got;
  for (int i = 0; i <= s.steps; ++i) got.push_back(i < b.length() ? b.total(i) : 0);
  const auto want = predicted_betti_series(a, s.steps);
  BettiTable ib;
  const bool ideal_linear = os_ideal_resolution_is_linear(a, s.field, s.steps, &ib);
  std::ostringstream text;
  text << "homology module linear from " << h.start << ": " << (linear ? "yes" : "no") << "\n"
       << "betti " << vec_text(got) << " predicted " << vec_text(want) << "\n"
       << "os ideal linear: " << (ideal_linear ? "yes" : "no");
  emit(s, "check-linear",
       Json{{"start", h.start},
            {"linear", linear},
            {"betti", got},
            {"predicted", want},
            {"formula_holds", got == want},
            {"ideal_linear", ideal_linear}},
       text.str());
  if (!linear || got != want) throw VerificationFailed("resolution is not as predicted");
}

void cmd_socle(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const auto dims = socle_dims(os_algebra(a, s.field));
  emit(s, "socle", Json{{"dims", dims}}, "socle " + vec_text(dims));
}

void cmd_singular_variety(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const ProductDecomposition d = product_decompose(a);
  const auto eqs = singular_variety_equations(a, s.field);
  Json factors = Json::array();
  std::string text = "factors:";
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    factors.push_back(Json{{"hyperplanes", masks_json({d.factors[i]})[0]}, {"central", bool(d.central[i])}});
    text += " " + mask_text(d.factors[i]) + (d.central[i] ? "c" : "");
  }
  Json equations = Json::array();
  text += "\nequations:";
  for (const auto& eq : eqs) {
    std::string e;
    Json terms = Json::array();
    for (int i = 0; i < a.size(); ++i) {
      if (eq[i].is_zero()) continue;
      e += (e.empty() ? "" : " + ") + std::string("x") + std::to_string(i + 1);
      terms.push_back(i + 1);
    }
    equations.push_back(terms);
    text += "\n  " + e + " = 0";
  }
  text += "\ncodimension " + std::to_string(eqs.size());
  emit(s, "singular-variety",
       Json{{"factors", factors}, {"equations", equations}, {"codimension", eqs.size()}}, text);
}

void cmd_local_system(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const GradedModule alg = os_algebra(a, s.field);
  std::vector<Scalar> e;
  if (!s.e.empty()) {
    e = parse_vector(s.field, s.e, a.size());
  } else {
    if (!s.seed_given) throw PreconditionError("sampling needs --seed");
    LinearFormSampler sampler(s.field, s.seed);
    e = sampler.on_subspace(a.size(), singular_variety_equations(a, s.field));
  }
  const AomotoReport r = aomoto_homology(alg, e);
  const bool sing = is_singular(alg, e);
  std::string text = "e = (";
  for (std::size_t i = 0; i < e.size(); ++i) text += (i ? ", " : "") + e[i].to_string();
  text += ")\nh = " + vec_text(r.dims) + "\nsingular: " + (sing ? "yes" : "no");
  Json payload = aomoto_to_json(r);
  payload["singular"] = sing;
  emit(s, "local-system", payload, text);
}

void cmd_bgg_hilbert(const Session& s) {
  const Arrangement a = load_arrangement(s);
  const GradedModule alg = os_algebra(a, s.field);
  const int l = os_rank(a);
  const int trunc = std::max(0, s.max_degree - l);
  const auto h = f_module_hilbert(alg, trunc);
  const auto want = predicted_betti_series(a, trunc);
  const LExactnessReport rep = verify_L_exactness(alg, s.max_degree);
  std::ostringstream text;
  text << "F(A) generated in degree " << l << "\nhilbert " << vec_text(h) << "\npredicted "
       << vec_text(want) << "\nL(A) exact through degree " << s.max_degree << ": "
       << (rep.exact ? "yes" : "no");
  emit(s, "bgg-hilbert",
       Json{{"generator_degree", l},
            {"hilbert", hilbert_to_json(h, l)},
            {"predicted", want},
            {"exact", rep.exact}},
       text.str());
  if (!rep.exact || h != want) throw VerificationFailed("F(A) check failed");
}

void cmd_groebner(const Session& s) {
  const IdealFile f = ideal_from_json(read_json_file(s.input));
  const Field k = s.field_text == "Q" ? f.field : s.field;
  std::vector<ExteriorElement> gens;
  for (const auto& g : f.gens) {
    ExteriorElement x(k, f.n);
    for (const auto& [m, c] : g.terms()) x.add_term(m, k.convert(c));
    gens.push_back(x);
  }
  const auto rule = s.lex ? MonomialOrder::Rule::kLex : MonomialOrder::Rule::kDegLex;
  const MonomialOrder order = s.order.empty() ? MonomialOrder::natural(f.n, rule)
                                              : MonomialOrder::from_ranking(parse_permutation(s.order, f.n), rule);
  const GroebnerBasis g = buchberger(gens, order);
  const auto in = initial_ideal(g);
  Json basis = Json::array();
  std::string text = "basis:\n";
  for (const auto& x : g.elements) {
    basis.push_back(x.to_string(f.names));
    text += "  " + x.to_string(f.names) + "\n";
  }
  Json init = Json::array();
  text += "initial ideal:";
  for (Mask m : in) {
    const std::string t = ExteriorElement::monomial(k, f.n, m).to_string(f.names);
    init.push_back(t);
    text += " " + t;
  }
  emit(s, "groebner", Json{{"basis", basis}, {"initial_ideal", init}}, text);
}

void cmd_sf_betti(const Session& s) {
  const MonomialIdealFile m = monomial_ideal_from_json(read_json_file(s.input));
  const MultigradedBetti sb = hochster_betti(m.n, m.gens, s.field);
  const MultigradedBetti eb = exterior_multigraded_betti(m.n, m.gens, s.field, s.steps);
  const BettiIdentityReport rep = verify_betti_identity(m.n, m.gens, s.field, s.steps, m.n + s.steps);
  std::ostringstream text;
  text << "over S:\n" << sb.coarsen().to_string() << "over E:\n" << eb.coarsen().to_string()
       << "identity through t^" << s.steps << ": " << (rep.equal ? "holds" : "fails");
  emit(s, "sf-betti",
       Json{{"symmetric", multigraded_betti_to_json(sb)},
            {"exterior", multigraded_betti_to_json(eb)},
            {"identity", rep.equal}},
       text.str());
  if (!rep.equal) throw VerificationFailed("Betti identity fails");
}

void cmd_alexander_dual(const Session& s) {
  const SimplicialComplex d = complex_from_json(read_json_file(s.input));
  const SimplicialComplex dual = alexander_dual(d);
  std::string text = dual.is_void() ? "void complex" : "facets:";
  for (Mask f : dual.facets()) text += " " + mask_text(f);
  emit(s, "alexander-dual", complex_to_json(dual), text);
}

void cmd_verify(const Session& s) {
  AcceptanceConfig config;
  config.field = s.field;
  config.seed = s.seed_given ? s.seed : config.seed;
  config.samples = s.samples;
  config.corpus_dir = s.input;
  Json results = Json::array();
  std::string text;
  bool all = true;
  for (int id : suite_members(s.suite)) {
    const CriterionResult r = run_criterion(id, config);
    std::fprintf(stderr, "criterion %02d: %.2f s\n", id, r.seconds);
    results.push_back(Json{{"id", r.id}, {"slug", r.slug}, {"pass", r.pass}, {"detail", r.detail}});
    text += format_result(r) + "\n";
    all = all && r.pass;
  }
  emit(s, "verify", Json{{"suite", s.suite}, {"results", results}, {"pass", all}}, text);
  if (!all) throw VerificationFailed("suite " + s.suite + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlik-Solomon algebras, exterior resolutions and square-free modules"};
  app.require_subcommand(1);
  Session s;
  app.add_option("--field", s.field_text, "Q or Fp:<p>");
  app.add_option("--steps", s.steps, "homological steps")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", s.max_degree, "internal degree bound")->check(CLI::PositiveNumber);
  app.add_option_function<std::uint64_t>(
      "--seed", [&](const std::uint64_t& v) { s.seed = v; s.seed_given = true; }, "random seed");
  app.add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--order", s.order, "variable ranking, largest first, 1-based, comma separated");

  struct Spec {
    const char* name;
    const char* help;
    void (*fn)(const Session&);
    bool arrangement;
  };
  const Spec specs[] = {
      {"os-ideal", "Orlik-Solomon ideal generators and broken circuits", cmd_os_ideal, true},
      {"circuits", "dependent circuits and minimal empty sets", cmd_circuits, true},
      {"char-poly", "characteristic polynomial", cmd_char_poly, true},
      {"betti", "Betti table over E", cmd_betti, true},
      {"check-linear", "linearity and Betti series of the homology module", cmd_check_linear, true},
      {"socle", "socle dimensions of the Orlik-Solomon algebra", cmd_socle, true},
      {"singular-variety", "product factors and singular variety equations", cmd_singular_variety, true},
      {"local-system", "Aomoto complex homology", cmd_local_system, true},
      {"bgg-hilbert", "Hilbert function of F(A) and exactness of L(A)", cmd_bgg_hilbert, true},
      {"groebner", "Groebner basis of an ideal of E", cmd_groebner, false},
      {"sf-betti", "Betti numbers of a square-free monomial ideal over S and E", cmd_sf_betti, false},
      {"alexander-dual", "Alexander dual of a simplicial complex", cmd_alexander_dual, false},
      {"verify", "run an acceptance suite", cmd_verify, false},
  };
  std::vector<std::pair<CLI::App*, const Spec*>> subs;
  for (const Spec& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    if (std::string(spec.name) == "verify") {
      sub->add_option("--suite", s.suite, "suite name or criterion slug");
      sub->add_option("--samples", s.samples, "samples per fixture")->check(CLI::PositiveNumber);
      sub->add_option("corpus", s.input, "corpus directory");
    } else {
      sub->add_option("input", s.input, "input file")->required();
    }
    if (spec.arrangement) {
      sub->add_option("--decone", s.decone, "decone at hyperplane h (1-based) first");
      sub->add_flag("--cone", s.cone, "cone the arrangement first");
    }
    if (std::string(spec.name) == "betti") {
      sub->add_option("--module", s.module, "homology, ideal or algebra");
    }
    if (std::string(spec.name) == "local-system") sub->add_option("--e", s.e, "coefficients, comma separated");
    if (std::string(spec.name) == "groebner") sub->add_flag("--lex", s.lex, "pure lex instead of degree lex");
    subs.emplace_back(sub, &spec);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    try {
      s.field = Field::parse(s.field_text);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
    for (const auto& [sub, spec] : subs) {
      if (sub->parsed()) spec->fn(s);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    code = 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    code = 3;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    code = 1;
  }
  std::fprintf(stderr, "time: %.3f s\n",
               std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return code;
}
