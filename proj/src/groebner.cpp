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

#include "osres/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "osres/linalg.hpp"
#include "osres/local_systems.hpp"
#include "osres/module.hpp"

namespace osres {

MonomialOrder MonomialOrder::natural(int n, Rule rule) {
  std::vector<int> bit(n);
  std::iota(bit.begin(), bit.end(), 0);
  return MonomialOrder(bit, rule);
}

MonomialOrder MonomialOrder::from_ranking(const std::vector<int>& ranking, Rule rule) {
  const int n = static_cast<int>(ranking.size());
  std::vector<int> bit(n, -1);
  for (int r = 0; r < n; ++r) {
    const int v = ranking[r];
    if (v < 0 || v >= n || bit[v] >= 0) throw PreconditionError("ranking is not a permutation");
    bit[v] = n - 1 - r;
  }
  return MonomialOrder(bit, rule);
}

Mask MonomialOrder::key(Mask m) const {
  Mask k = 0;
  for (int i = 0; i < num_vars(); ++i) {
    if (m >> i & 1) k |= Mask{1} << bit_[i];
  }
  return k;
}

bool MonomialOrder::less(Mask a, Mask b) const {
  if (rule_ == Rule::kDegLex && degree_of(a) != degree_of(b)) return degree_of(a) < degree_of(b);
  return key(a) < key(b);
}

Mask lead_monomial(const ExteriorElement& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("lead monomial of zero");
  Mask best = f.terms().begin()->first;
  for (const auto& [m, c] : f.terms()) {
    if (order.less(best, m)) best = m;
  }
  return best;
}

namespace {

ExteriorElement monic(const ExteriorElement& f, const MonomialOrder& order) {
  return f * f.coefficient(lead_monomial(f, order)).inverse();
}

// u * f for a monomial u.
ExteriorElement times_monomial(Mask u, const ExteriorElement& f) {
  return ExteriorElement::monomial(f.field(), f.num_vars(), u) * f;
}

ExteriorElement reduce(const ExteriorElement& f, const std::vector<ExteriorElement>& elems,
                       const std::vector<Mask>& leads, const MonomialOrder& order) {
  ExteriorElement p = f;
  ExteriorElement r(f.field(), f.num_vars());
  while (!p.is_zero()) {
    const Mask t = lead_monomial(p, order);
    const Scalar c = p.coefficient(t);
    std::size_t k = 0;
    while (k < leads.size() && (leads[k] & t) != leads[k]) ++k;
    if (k == leads.size()) {
      r.add_term(t, c);
      p.add_term(t, -c);
      continue;
    }
    const Mask u = t & ~leads[k];
    const int s = product_sign(u, leads[k]);
    p = p - times_monomial(u, elems[k]) * (s > 0 ? c : -c);
  }
  return r;
}

struct Pair {
  int degree;
  long seq;
  int i;
  int j;  // >= 0: S-pair (i, j); < 0: square pair of variable -1-j
};

std::vector<Pair> pairs_for(const std::vector<Mask>& leads, int k, long& seq) {
  std::vector<Pair> out;
  for (int i = 0; i < k; ++i) out.push_back({degree_of(leads[i] | leads[k]), seq++, i, k});
  for (int v = 0; v < kMaxVariables; ++v) {
    if (leads[k] >> v & 1) out.push_back({degree_of(leads[k]) + 1, seq++, k, -1 - v});
  }
  return out;
}

ExteriorElement pair_polynomial(const Pair& p, const std::vector<ExteriorElement>& elems,
                                const std::vector<Mask>& leads) {
  const ExteriorElement& gi = elems[p.i];
  if (p.j < 0) {
    return times_monomial(Mask{1} << (-1 - p.j), gi);
  }
  const ExteriorElement& gj = elems[p.j];
  const Mask l = leads[p.i] | leads[p.j];
  const Mask ui = l & ~leads[p.i];
  const Mask uj = l & ~leads[p.j];
  const Field k = gi.field();
  // sign(u, m) * u * g has lead term +l.
  const Scalar si = product_sign(ui, leads[p.i]) > 0 ? k.one() : -k.one();
  const Scalar sj = product_sign(uj, leads[p.j]) > 0 ? k.one() : -k.one();
  return times_monomial(ui, gi) * si - times_monomial(uj, gj) * sj;
}

}  // namespace

ExteriorElement normal_form(const ExteriorElement& f, const GroebnerBasis& g) {
  return reduce(f, g.elements, g.leads, g.order);
}

GroebnerBasis buchberger(const std::vector<ExteriorElement>& gens, const MonomialOrder& order) {
  std::vector<ExteriorElement> elems;
  std::vector<Mask> leads;
  auto cmp = [](const Pair& a, const Pair& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
  };
  std::vector<Pair> queue;
  long seq = 0;
  auto insert = [&](const ExteriorElement& f) {
    ExteriorElement r = reduce(f, elems, leads, order);
    if (r.is_zero()) return;
    r = monic(r, order);
    leads.push_back(lead_monomial(r, order));
    elems.push_back(std::move(r));
    for (const Pair& p : pairs_for(leads, static_cast<int>(elems.size()) - 1, seq)) {
      queue.push_back(p);
    }
  };
  std::vector<ExteriorElement> sorted;
  for (const auto& g : gens) {
    if (g.num_vars() != order.num_vars()) throw PreconditionError("order has the wrong arity");
    if (!g.is_homogeneous()) throw PreconditionError("generator is not homogeneous");
    if (!g.is_zero()) sorted.push_back(g);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  for (const auto& g : sorted) insert(g);
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), cmp);
    const Pair p = *it;
    queue.erase(it);
    insert(pair_polynomial(p, elems, leads));
  }
  // Auto-reduction: drop elements whose lead is a multiple of an earlier or
  // different lead, then reduce tails.
  std::vector<bool> keep(elems.size(), true);
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < elems.size() && keep[j]; ++i) {
      if (i == j || !keep[i]) continue;
      const bool divides = (leads[i] & leads[j]) == leads[i];
      if (divides && (leads[i] != leads[j] || i < j)) keep[j] = false;
    }
  }
  GroebnerBasis out{order, {}, {}};
  std::vector<ExteriorElement> kept;
  std::vector<Mask> kept_leads;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (keep[i]) {
      kept.push_back(elems[i]);
      kept_leads.push_back(leads[i]);
    }
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<ExteriorElement> others;
    std::vector<Mask> other_leads;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) {
        others.push_back(kept[j]);
        other_leads.push_back(kept_leads[j]);
      }
    }
    ExteriorElement tail = kept[i];
    const Scalar lc = tail.coefficient(kept_leads[i]);
    tail.add_term(kept_leads[i], -lc);
    ExteriorElement r = reduce(tail, others, other_leads, order);
    r.add_term(kept_leads[i], lc);
    out.elements.push_back(monic(r, order));
    out.leads.push_back(kept_leads[i]);
  }
  return out;
}

bool is_groebner_basis(const GroebnerBasis& g) {
  long seq = 0;
  for (int k = 0; k < static_cast<int>(g.elements.size()); ++k) {
    std::vector<Mask> prefix(g.leads.begin(), g.leads.begin() + k + 1);
    for (const Pair& p : pairs_for(prefix, k, seq)) {
      if (!normal_form(pair_polynomial(p, g.elements, g.leads), g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Mask> initial_ideal(const GroebnerBasis& g) {
  std::vector<Mask> out;
  for (Mask m : g.leads) {
    bool minimal = true;
    for (Mask o : g.leads) minimal = minimal && (o == m || (o & m) != o);
    if (minimal && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_regular_linear_form(const ExteriorElement& f, const std::vector<ExteriorElement>& gens) {
  if (f.is_zero() || f.degree() != 1) throw PreconditionError("expected a nonzero linear form");
  const GradedModule q = quotient_module(f.field(), f.num_vars(), gens);
  std::vector<Scalar> e;
  for (int i = 0; i < f.num_vars(); ++i) e.push_back(f.coefficient(Mask{1} << i));
  for (std::int64_t h : multiplication_homology(q, e)) {
    if (h != 0) return false;
  }
  return true;
}

std::vector<ExteriorElement> set_variable_to_zero(const std::vector<ExteriorElement>& gens,
                                                  int var) {
  std::vector<ExteriorElement> out;
  for (const auto& g : gens) {
    ExteriorElement r(g.field(), g.num_vars() - 1);
    for (const auto& [m, c] : g.terms()) {
      if (m >> var & 1) continue;
      const Mask low = m & ((Mask{1} << var) - 1);
      const Mask high = (m >> (var + 1)) << var;
      r.add_term(low | high, c);
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool same_ideal(const std::vector<ExteriorElement>& a, const std::vector<ExteriorElement>& b,
                Field field, int n) {
  for (int d = 0; d <= n; ++d) {
    const Matrix ma = ideal_span(field, n, a, d);
    const Matrix mb = ideal_span(field, n, b, d);
    Matrix both(field, ma.rows() + mb.rows(), ma.cols());
    for (int r = 0; r < ma.rows(); ++r) both.set_row(r, ma.row(r));
    for (int r = 0; r < mb.rows(); ++r) both.set_row(ma.rows() + r, mb.row(r));
    const int ra = rank(ma), rb = rank(mb), rab = rank(both);
    if (ra != rab || rb != rab) return false;
  }
  return true;
}

}  // namespace osres
