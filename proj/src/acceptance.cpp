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

#include "osres/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>

#include "osres/bgg.hpp"
#include "osres/fixtures.hpp"
#include "osres/groebner.hpp"
#include "osres/io.hpp"
#include "osres/local_systems.hpp"
#include "osres/module.hpp"
#include "osres/resolution.hpp"
#include "osres/squarefree.hpp"

namespace osres {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures; keeps the first few for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.size() < 3) first_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  std::string failures() const {
    std::ostringstream out;
    out << failures_ << " failure(s):";
    for (const auto& f : first_) out << " " << f << ";";
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> first_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::vector<std::int64_t> totals(const BettiTable& b, int steps) {
  std::vector<std::int64_t> out;
  for (int i = 0; i <= steps; ++i) out.push_back(i < b.length() ? b.total(i) : 0);
  return out;
}

GradedModule os_algebra(const Arrangement& a, Field k) {
  return quotient_module(k, a.size(), os_ideal(a, k));
}

std::vector<std::int64_t> dims_of(const GradedModule& m) {
  std::vector<std::int64_t> out;
  for (int d = 0; d <= m.max_degree(); ++d) out.push_back(d < m.min_degree() ? 0 : m.dim(d));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool satisfies(const std::vector<Scalar>& e, const std::vector<std::vector<Scalar>>& equations,
               Field k) {
  for (const auto& eq : equations) {
    Scalar s = k.zero();
    for (std::size_t i = 0; i < e.size(); ++i) s += eq[i] * e[i];
    if (!s.is_zero()) return false;
  }
  return true;
}

// Random coefficient vectors for one arrangement: even samples lie on the
// predicted singular variety, odd samples on a random subset of its
// equations (often none).
std::vector<std::vector<Scalar>> samples_for(const Arrangement& a, Field k,
                                             const AcceptanceConfig& config, int index) {
  LinearFormSampler sampler(k, config.seed + 7919u * static_cast<std::uint64_t>(index));
  const auto equations = singular_variety_equations(a, k);
  std::vector<std::vector<Scalar>> out;
  for (int s = 0; s < config.samples; ++s) {
    std::vector<std::vector<Scalar>> chosen;
    for (const auto& eq : equations) {
      if (s % 2 == 0 || sampler.engine()() % 2 == 0) chosen.push_back(eq);
    }
    out.push_back(sampler.on_subspace(a.size(), chosen));
  }
  return out;
}

// No nonzero entry between objects with equal masks.
bool b0_is_minimal(const B0Complex& x) {
  for (int p = 1; p < x.length(); ++p) {
    for (int g = 0; g < x.maps[p].rows(); ++g) {
      for (const auto& [h, v] : x.maps[p].row(g)) {
        if (x.objects[p][g] == x.objects[p - 1][h]) return false;
      }
    }
  }
  return true;
}

CriterionResult resolution_linearity(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  double worst = 0;
  std::string worst_name;
  for (const Arrangement& a : load_corpus(c)) {
    if (a.size() > 7) continue;
    const auto t0 = Clock::now();
    const HomologyModule h = homology_module(a, c.field);
    const BettiTable b = betti_table(h.module, 4);
    const double s = since(t0);
    if (s > worst) {
      worst = s;
      worst_name = a.name();
    }
    t.check(is_linear(b, h.start), a.name() + " not linear from " + std::to_string(h.start));
    t.check(h.start == a.size() - os_rank(a), a.name() + " start degree");
    t.check(s < 60.0, a.name() + " took " + std::to_string(s) + " s");
  }
  r.pass = t.ok();
  std::ostringstream d;
  if (t.ok()) {
    d << t.checks() / 3 << " fixtures linear from n - rank through step 4; slowest " << worst_name
      << " " << static_cast<int>(worst * 1000) << " ms";
  } else {
    d << t.failures();
  }
  r.detail = d.str();
  return r;
}

CriterionResult betti_formula(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  std::map<std::string, std::string> spot;
  for (const Arrangement& a : load_corpus(c)) {
    if (a.size() > 7) continue;
    const HomologyModule h = homology_module(a, c.field);
    const auto got = totals(betti_table(h.module, 4), 4);
    const auto want = predicted_betti_series(a, 4);
    t.check(got == want, a.name() + " " + join(got) + " vs " + join(want));
    spot[a.name()] = join(got);
  }
  t.check(spot.count("CENTRAL3") && spot["CENTRAL3"] == "2,3,4,5,6", "CENTRAL3 spot value");
  t.check(spot.count("GENERIC3") && spot["GENERIC3"] == "3,6,10,15,21", "GENERIC3 spot value");
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(t.checks() - 2) +
                          " fixtures match (-1)^r chi/(1-t)^n; CENTRAL3 (" + spot["CENTRAL3"] +
                          "), GENERIC3 (" + spot["GENERIC3"] + ")"
                    : t.failures();
  return r;
}

CriterionResult socle(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  for (const Arrangement& a : load_corpus(c)) {
    const GradedModule alg = os_algebra(a, c.field);
    const std::vector<std::int64_t> s = socle_dims(alg);
    const int top = os_rank(a);
    const auto dims = dims_of(alg);
    bool ok = static_cast<int>(dims.size()) == top + 1;
    for (int d = alg.min_degree(); ok && d <= alg.max_degree(); ++d) {
      const std::int64_t want = d == top ? dims[top] : 0;
      ok = s[d - alg.min_degree()] == want;
    }
    t.check(ok, a.name() + " socle " + join(s));
  }
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(t.checks()) + " fixtures: socle = A_top" : t.failures();
  return r;
}

CriterionResult singular_variety(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  int singular = 0, total = 0, index = 0;
  for (const Arrangement& a : load_corpus(c)) {
    const GradedModule alg = os_algebra(a, c.field);
    const auto equations = singular_variety_equations(a, c.field);
    int mismatches = 0;
    for (const auto& e : samples_for(a, c.field, c, index++)) {
      const bool s = is_singular(alg, e);
      singular += s;
      ++total;
      if (s != satisfies(e, equations, c.field)) ++mismatches;
    }
    t.check(mismatches == 0, a.name() + " " + std::to_string(mismatches) + " mismatches");
  }
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(total) + " samples over " + std::to_string(t.checks()) +
                          " fixtures, " + std::to_string(singular) + " singular, 0 mismatches"
                    : t.failures();
  return r;
}

CriterionResult contiguity(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  int checked = 0, index = 0;
  for (const Arrangement& a : load_corpus(c)) {
    const GradedModule alg = os_algebra(a, c.field);
    const int codim = static_cast<int>(singular_variety_equations(a, c.field).size());
    for (const auto& e : samples_for(a, c.field, c, index++)) {
      if (!is_singular(alg, e)) continue;
      ++checked;
      t.check(verify_contiguity(alg, e, codim), a.name() + " e = sample " + std::to_string(checked));
    }
  }
  const Field k = c.field;
  const Arrangement c3 = central_lines(k, 3);
  const AomotoReport w = aomoto_homology(os_algebra(c3, k), {k.one(), -k.one(), k.zero()});
  t.check(w.dims == std::vector<std::int64_t>{0, 1, 1}, "CENTRAL3 witness " + join(w.dims));
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(checked) +
                          " singular samples contiguous 0..codim; CENTRAL3 e1-e2 gives (" +
                          join(w.dims) + ")"
                    : t.failures();
  return r;
}

CriterionResult bgg(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  for (const Arrangement& a : load_corpus(c)) {
    const GradedModule alg = os_algebra(a, c.field);
    const auto h = f_module_hilbert(alg, 6);
    const auto want = predicted_betti_series(a, 6);
    t.check(h == want, a.name() + " F(A) " + join(h) + " vs " + join(want));
    const LExactnessReport rep = verify_L_exactness(alg, 8);
    t.check(rep.exact && rep.d_squared_zero, a.name() + " L(A) not exact");
  }
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(t.checks() / 2) +
                          " fixtures: Hilbert function of F(A) through l+6, L(A) exact through "
                          "internal degree 8"
                    : t.failures();
  return r;
}

CriterionResult generic_linearity(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  for (const Arrangement& a : generic_family(Field::rationals())) {
    t.check(os_ideal_resolution_is_linear(a, c.field, 4), a.name() + " not linear");
  }
  BettiTable b;
  const Arrangement ng = nongeneric_lines(Field::rationals());
  const bool lin = os_ideal_resolution_is_linear(ng, c.field, 4, &b);
  const GradedModule i = ideal_module(c.field, ng.size(), os_ideal(ng, c.field));
  const auto step = first_nonlinear_step(b, i.min_degree());
  t.check(!lin && step && *step <= 2, "nongeneric fixture linear through step 2");
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(t.checks() - 1) +
                          " generic arrangements and cones linear; NONGENERIC4 fails at step " +
                          std::to_string(step ? *step : -1)
                    : t.failures();
  return r;
}

CriterionResult example_abcd(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  const Field k = c.field;
  const auto gens = example_ideal_abcd(k);
  const MonomialOrder order = MonomialOrder::from_ranking(example_ranking_abcd(), MonomialOrder::Rule::kLex);
  const GroebnerBasis g = buchberger(gens, order);
  t.check(is_groebner_basis(g), "not a Groebner basis");
  bool same = g.elements.size() == gens.size();
  for (std::size_t i = 0; same && i < gens.size(); ++i) same = g.elements[i] == gens[i];
  t.check(same, "basis differs from the three quadrics");
  t.check(initial_ideal(g) == std::vector<Mask>{0b0011, 0b0101, 0b0110}, "initial ideal");
  t.check(is_regular_linear_form(ExteriorElement::monomial(k, 4, 0b1000), gens), "d not regular");
  std::vector<ExteriorElement> square;
  for (Mask m : masks_of_degree(3, 2)) square.push_back(ExteriorElement::monomial(k, 3, m));
  t.check(same_ideal(set_variable_to_zero(gens, 3), square, k, 3), "reduction mod d");
  r.pass = t.ok();
  r.detail = t.ok() ? "basis = {ab+cd, ac, bc}; in(I) = (ab, ac, bc); d regular; I mod d = m^2"
                    : t.failures();
  return r;
}

CriterionResult betti_identity(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  int ideals = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_squarefree_ideals(n)) {
      ++ideals;
      t.check(verify_betti_identity(n, g, c.field, 3, n + 3).equal, "n=" + std::to_string(n));
    }
  }
  const Arrangement cc3 = iterated_cone(central_lines(Field::rationals(), 3), 1);
  t.check(verify_betti_identity(cc3.size(), broken_circuits(cc3), c.field, 3, cc3.size() + 3).equal,
          "broken circuits of the cone over CENTRAL3");
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(ideals) +
                          " ideals on n <= 4 (plus one broken-circuit ideal): identity exact "
                          "through t^3"
                    : t.failures();
  return r;
}

CriterionResult eagon_reiner(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  int ideals = 0, cm = 0, central = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : all_squarefree_ideals(n)) {
      ++ideals;
      const EagonReinerReport rep = eagon_reiner_check(n, g, c.field);
      cm += rep.cohen_macaulay;
      t.check(rep.holds(), "n=" + std::to_string(n));
    }
  }
  for (const Arrangement& a : load_corpus(c)) {
    if (!a.is_central()) continue;
    ++central;
    const SimplicialComplex bc = stanley_reisner_complex(a.size(), broken_circuits(a));
    t.check(reisner_cm_test(bc, c.field), a.name() + " broken-circuit complex not CM");
  }
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(ideals) + " ideals (" + std::to_string(cm) +
                          " Cohen-Macaulay) satisfy the biconditional; " + std::to_string(central) +
                          " broken-circuit complexes CM"
                    : t.failures();
  return r;
}

CriterionResult links(const AcceptanceConfig&) {
  CriterionResult r;
  Tally t;
  // Link ideals need characteristic 0.
  const Field q = Field::rationals();
  const auto mats = link_corpus();
  const auto names = link_corpus_names();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const int n = static_cast<int>(mats[i].size());
    const auto gens = link_complement_ideal(q, mats[i]);
    const GradedModule im = ideal_module(q, n, gens);
    t.check(im.is_zero() || is_linear(betti_table(im, 3), im.min_degree()), names[i] + " ideal");
    const GradedModule h = annihilator_module(q, n, gens);
    t.check(is_linear(betti_table(h, 3), h.min_degree()), names[i] + " homology module");
  }
  const auto surface = surface_algebra_ideal(q, 2);
  // The initial ideal is every degree-2 monomial except the smallest one.
  for (const MonomialOrder& order :
       {MonomialOrder::natural(4), MonomialOrder::from_ranking({0, 1, 2, 3}, MonomialOrder::Rule::kDegLex)}) {
    std::vector<Mask> expected = masks_of_degree(4, 2);
    auto smallest = std::min_element(expected.begin(), expected.end(),
                                     [&](Mask x, Mask y) { return order.less(x, y); });
    expected.erase(smallest);
    t.check(initial_ideal(buchberger(surface, order)) == expected, "genus 2 initial ideal");
  }
  const GradedModule h = annihilator_module(q, 4, surface);
  const BettiTable b = betti_table(h, 1);
  t.check(b.at(0, h.min_degree()) == 1 && b.total(0) == 1, "genus 2 beta_0");
  t.check(b.total(1) == 5, "genus 2 beta_1 = " + std::to_string(b.total(1)));
  r.pass = t.ok();
  std::ostringstream d;
  d << "3 links linear (ideal and homology, 3 steps); genus 2: in(I) = all but the smallest "
       "quadric, beta_0 = 1 in degree " << h.min_degree() << ", beta_1 = " << b.total(1);
  r.detail = t.ok() ? d.str() : t.failures();
  return r;
}

CriterionResult cross_engine(const AcceptanceConfig& c) {
  CriterionResult r;
  Tally t;
  int arrangements = 0;
  for (const Arrangement& a : load_corpus(c)) {
    ++arrangements;
    const auto nbc = nbc_basis(a).dims;
    t.check(nbc == dims_of(os_algebra(a, c.field)), a.name() + " nbc " + join(nbc));
  }
  std::vector<B0Complex> complexes;
  for (auto& f : b0_corpus(c.field)) complexes.push_back(std::move(f.complex));
  for (int n = 1; n <= 4; ++n) {
    for (auto& x : single_inclusions(c.field, n)) complexes.push_back(std::move(x));
  }
  const int steps = 3;
  for (std::size_t i = 0; i < complexes.size(); ++i) {
    const B0Complex& x = complexes[i];
    const std::string tag = "B0 complex " + std::to_string(i);
    t.check(phi_round_trip(x, steps), tag + " round trip");
    if (!x.is_acyclic()) continue;
    const FreeComplex phi = phi_total(x, steps);
    t.check(phi.d_squared_zero() && phi.is_acyclic(), tag + " total complex");
    t.check(phi.is_minimal() == b0_is_minimal(x), tag + " minimality");
    const MultigradedBetti want = multigraded_betti(x.cokernel_module(), steps);
    t.check(phi.minimal_betti(steps).steps == want.steps, tag + " Betti ranks");
  }
  const auto p = transfer(three_points_presentation(c.field), Ring::kExterior);
  t.check(multigraded_betti(exterior_presented_module(p), steps).steps ==
              phi_total(squarefree_part(presentation_complex(p)), steps).minimal_betti(steps).steps,
          "three points presentation");
  r.pass = t.ok();
  r.detail = t.ok() ? std::to_string(arrangements) + " arrangements: nbc = rank dims; " +
                          std::to_string(complexes.size()) +
                          " complexes: Phi round trip and Betti ranks agree through step 3"
                    : t.failures();
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_slugs() {
  static const std::vector<std::string> slugs = {
      "resolution-linearity", "betti-formula", "socle",        "singular-variety",
      "contiguity",           "bgg",           "generic-ideal", "example-abcd",
      "betti-identity",       "eagon-reiner",  "links",        "cross-engine"};
  return slugs;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out = {"all",      "resolution", "singular", "bgg",
                                  "groebner", "transfer",   "duality",  "links"};
  for (const auto& s : criterion_slugs()) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

std::vector<int> suite_members(const std::string& suite) {
  static const std::map<std::string, std::vector<int>> groups = {
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
      {"resolution", {1, 2, 3}},
      {"singular", {4, 5}},
      {"bgg", {6, 7}},
      {"groebner", {8}},
      {"transfer", {9, 12}},
      {"duality", {10}},
      {"links", {11}},
  };
  auto it = groups.find(suite);
  if (it != groups.end()) return it->second;
  const auto& slugs = criterion_slugs();
  for (std::size_t i = 0; i < slugs.size(); ++i) {
    if (slugs[i] == suite) return {static_cast<int>(i) + 1};
  }
  throw PreconditionError("unknown suite: " + suite);
}

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  using Fn = CriterionResult (*)(const AcceptanceConfig&);
  static const Fn fns[] = {resolution_linearity, betti_formula, socle,        singular_variety,
                           contiguity,           bgg,           generic_linearity, example_abcd,
                           betti_identity,       eagon_reiner,  links,        cross_engine};
  if (id < 1 || id > 12) throw PreconditionError("criterion id out of range");
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](config);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.slug = criterion_slugs()[id - 1];
  r.seconds = since(t0);
  return r;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s %02d %-21s ", r.pass ? "PASS" : "FAIL", r.id, r.slug.c_str());
  return head + r.detail;
}

std::vector<Arrangement> load_corpus(const AcceptanceConfig& config) {
  if (config.corpus_dir.empty()) return arrangement_corpus(Field::rationals());
  namespace fs = std::filesystem;
  fs::path dir(config.corpus_dir);
  if (fs::is_directory(dir / "arrangements")) dir /= "arrangements";
  if (!fs::is_directory(dir)) throw ParseError("not a directory: " + config.corpus_dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Arrangement> out;
  for (const auto& f : files) {
    Arrangement a = arrangement_from_json(read_json_file(f.string()));
    if (a.name().empty()) a.set_name(f.stem().string());
    out.push_back(std::move(a));
  }
  if (out.empty()) throw ParseError("no arrangement files in " + dir.string());
  return out;
}

}  // namespace osres
