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

#include "osres/squarefree.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "osres/monomials.hpp"
#include "osres/series.hpp"

namespace osres {

namespace {

Mask full(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool subset(Mask a, Mask b) { return (a & b) == a; }

Scalar sign_scalar(Field k, int s) { return s > 0 ? k.one() : -k.one(); }

bool is_squarefree(const MultiDegree& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0 || x == 1; });
}

Mask to_mask(const MultiDegree& a) {
  Mask m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) m |= Mask{1} << i;
  }
  return m;
}

int total_degree(const MultiDegree& a) {
  int t = 0;
  for (int x : a) t += x;
  return t;
}

MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

// a - b when b <= a, else nullopt.
std::optional<MultiDegree> subtract(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree c = a;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] -= b[i];
    if (c[i] < 0) return std::nullopt;
  }
  return c;
}

std::int64_t rank_of(Field k, int rows, int cols, const std::vector<SparseVec>& data) {
  if (rows == 0 || cols == 0) return 0;
  Matrix m(k, rows, cols);
  for (int r = 0; r < rows; ++r) m.set_row(r, data[r]);
  return rank(m);
}

// A module described per multidegree: cells[a] is the number of basis cells
// of the ambient module in degree a and relations[a] spans the submodule
// there. act(var, a, cell) gives the target (degree, cell, sign) of e_var.
struct CellData {
  int count = 0;
  std::vector<SparseVec> relations;
};
using CellAction =
    std::function<std::optional<std::tuple<MultiDegree, int, int>>(int, const MultiDegree&, int)>;

GradedModule quotient_by_cells(Field k, int n, const std::map<MultiDegree, CellData>& cells,
                               const CellAction& act) {
  struct Piece {
    Echelon e;
    std::vector<int> global;  // cell -> index in its total degree, or -1
  };
  std::map<MultiDegree, Piece> pieces;
  std::map<int, int> dims;
  for (const auto& [a, cd] : cells) {
    Matrix m(k, static_cast<int>(cd.relations.size()), cd.count);
    for (int r = 0; r < m.rows(); ++r) m.set_row(r, cd.relations[r]);
    Piece p{echelon(m, true), std::vector<int>(cd.count, -1)};
    std::vector<bool> pivot(cd.count, false);
    for (int c : p.e.pivots) pivot[c] = true;
    int& d = dims[total_degree(a)];
    for (int c = 0; c < cd.count; ++c) {
      if (!pivot[c]) p.global[c] = d++;
    }
    pieces.emplace(a, std::move(p));
  }
  int lo = 0, hi = -1;
  for (const auto& [d, v] : dims) {
    if (v == 0) continue;
    if (hi < lo) lo = hi = d;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  std::vector<int> dv;
  for (int d = lo; d <= hi; ++d) dv.push_back(dims.count(d) ? dims[d] : 0);
  GradedModule out(k, n, lo, dv);
  for (const auto& [a, p] : pieces) {
    const int d = total_degree(a);
    for (int c = 0; c < static_cast<int>(p.global.size()); ++c) {
      const int j = p.global[c];
      if (j < 0) continue;
      out.set_multidegree(d, j, a);
      for (int var = 0; var < n; ++var) {
        const auto t = act(var, a, c);
        if (!t) continue;
        const auto& [b, cell, s] = *t;
        auto it = pieces.find(b);
        if (it == pieces.end()) continue;
        SparseVec v = reduce_modulo(it->second.e, {{cell, sign_scalar(k, s)}});
        SparseVec image;
        for (const auto& [col, x] : v) image.emplace_back(it->second.global[col], x);
        canonicalize(image);
        out.set_action(var, d, j, std::move(image));
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Simplicial complexes

SimplicialComplex::SimplicialComplex(int n, std::vector<Mask> facets)
    : n_(n), facets_(std::move(facets)) {
  if (n < 0 || n > kMaxVariables) throw PreconditionError("bad ground set size");
  for (Mask f : facets_) {
    if (!subset(f, full(n))) throw PreconditionError("face outside the ground set");
  }
}

SimplicialComplex SimplicialComplex::simplex(int n) { return SimplicialComplex(n, {full(n)}); }

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<Mask>& faces) {
  std::vector<Mask> sorted = faces;
  std::sort(sorted.begin(), sorted.end(),
            [](Mask a, Mask b) { return degree_of(a) != degree_of(b) ? degree_of(a) > degree_of(b) : a < b; });
  std::vector<Mask> kept;
  for (Mask f : sorted) {
    bool covered = false;
    for (Mask g : kept) covered = covered || subset(f, g);
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return SimplicialComplex(n, kept);
}

bool SimplicialComplex::is_face(Mask f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Mask g) { return subset(f, g); });
}

std::vector<Mask> SimplicialComplex::faces() const {
  std::set<Mask> all;
  for (Mask f : facets_) {
    for (Mask s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return {all.begin(), all.end()};
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (Mask f : facets_) d = std::max(d, degree_of(f) - 1);
  return d;
}

SimplicialComplex SimplicialComplex::restriction(Mask w) const {
  std::vector<Mask> faces;
  for (Mask f : facets_) faces.push_back(f & w);
  return from_faces(n_, faces);
}

SimplicialComplex SimplicialComplex::link(Mask f) const {
  if (!is_face(f)) throw PreconditionError("link of a nonface");
  std::vector<Mask> faces;
  for (Mask g : facets_) {
    if (subset(f, g)) faces.push_back(g & ~f);
  }
  return from_faces(n_, faces);
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full(n_); ++m) {
    if (is_face(m)) {
      if (m == full(n_)) break;
      continue;
    }
    bool minimal = true;
    for (int i = 0; i < n_ && minimal; ++i) {
      if (m >> i & 1) minimal = is_face(m & ~(Mask{1} << i));
    }
    if (minimal) out.push_back(m);
    if (m == full(n_)) break;
  }
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  const int n = d.ground_size();
  std::vector<Mask> faces;
  for (Mask m = 0;; ++m) {
    if (!d.is_face(m)) faces.push_back(full(n) & ~m);
    if (m == full(n)) break;
  }
  if (faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_faces(n, faces);
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& d, Field k) {
  if (d.is_void()) return {};
  const int top = d.dimension();
  // Faces by size 0..top+1.
  std::vector<std::vector<Mask>> by_size(top + 2);
  for (Mask f : d.faces()) by_size[degree_of(f)].push_back(f);
  std::vector<std::map<Mask, int>> index(top + 2);
  for (int s = 0; s <= top + 1; ++s) {
    for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s][by_size[s][i]] = static_cast<int>(i);
  }
  // rank of the boundary from size s to size s - 1.
  std::vector<std::int64_t> rk(top + 3, 0);
  for (int s = 1; s <= top + 1; ++s) {
    std::vector<SparseVec> rows;
    for (Mask f : by_size[s]) {
      SparseVec row;
      int t = 0;
      for (int v = 0; v < d.ground_size(); ++v) {
        if (!(f >> v & 1)) continue;
        row.emplace_back(index[s - 1].at(f & ~(Mask{1} << v)), t % 2 == 0 ? k.one() : -k.one());
        ++t;
      }
      canonicalize(row);
      rows.push_back(std::move(row));
    }
    rk[s] = rank_of(k, static_cast<int>(rows.size()), static_cast<int>(by_size[s - 1].size()), rows);
  }
  std::vector<std::int64_t> h;
  for (int s = 0; s <= top + 1; ++s) {
    h.push_back(static_cast<std::int64_t>(by_size[s].size()) - rk[s] - rk[s + 1]);
  }
  return h;
}

bool reisner_cm_test(const SimplicialComplex& d, Field k) {
  for (Mask f : d.faces()) {
    const SimplicialComplex lk = d.link(f);
    const std::vector<std::int64_t> h = reduced_homology(lk, k);
    const int dim = lk.dimension();
    for (int i = -1; i < dim; ++i) {
      if (h[i + 1] != 0) return false;
    }
  }
  return true;
}

SimplicialComplex stanley_reisner_complex(int n, const std::vector<Mask>& gens) {
  std::vector<Mask> faces;
  for (Mask m = 0;; ++m) {
    bool face = true;
    for (Mask g : gens) face = face && !subset(g, m);
    if (face) faces.push_back(m);
    if (m == full(n)) break;
  }
  if (faces.empty()) return SimplicialComplex::void_complex(n);
  return SimplicialComplex::from_faces(n, faces);
}

std::vector<Mask> minimalize(const std::vector<Mask>& gens) {
  std::vector<Mask> out;
  for (Mask g : gens) {
    bool minimal = true;
    for (Mask h : gens) minimal = minimal && (h == g || !subset(h, g));
    if (minimal && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Betti numbers of square-free monomial ideals

MultigradedBetti hochster_betti(int n, const std::vector<Mask>& gens, Field k) {
  MultigradedBetti out;
  out.steps.resize(std::max(n, 1));
  const std::vector<Mask> g = minimalize(gens);
  if (std::find(g.begin(), g.end(), Mask{0}) != g.end()) {
    out.steps[0][MultiDegree(n, 0)] = 1;
    return out;
  }
  if (g.empty()) return out;
  const SimplicialComplex delta = stanley_reisner_complex(n, g);
  for (Mask w = 1; w <= full(n); ++w) {
    const std::vector<std::int64_t> h = reduced_homology(delta.restriction(w), k);
    for (int j = -1; j + 1 < static_cast<int>(h.size()); ++j) {
      const int i = degree_of(w) - j - 2;
      if (h[j + 1] != 0 && i >= 0 && i < n) out.steps[i][mask_multidegree(w, n)] = h[j + 1];
    }
    if (w == full(n)) break;
  }
  return out;
}

MultigradedBetti exterior_multigraded_betti(int n, const std::vector<Mask>& gens, Field k,
                                            int steps) {
  const std::vector<Mask> g = minimalize(gens);
  if (g.empty()) {
    MultigradedBetti out;
    out.steps.resize(steps + 1);
    return out;
  }
  return multigraded_betti(monomial_ideal_module(k, n, g), steps);
}

std::map<std::pair<int, MultiDegree>, std::int64_t> expand_symmetric_series(
    const MultigradedBetti& s_betti, int n, int t_trunc, int u_trunc) {
  std::map<std::pair<int, MultiDegree>, std::int64_t> out;
  for (int i = 0; i < static_cast<int>(s_betti.steps.size()) && i <= t_trunc; ++i) {
    for (const auto& [a, b] : s_betti.steps[i]) {
      if (!is_squarefree(a)) throw PreconditionError("symmetric Betti degree not square-free");
      const Mask w = to_mask(a);
      const int room = t_trunc - i;
      const MonomialLevels levels(degree_of(w), room);
      std::vector<int> vars;
      for (int j = 0; j < n; ++j) {
        if (w >> j & 1) vars.push_back(j);
      }
      for (int l = 0; l <= room; ++l) {
        for (int c = 0; c < levels.size(l); ++c) {
          MultiDegree m = a;
          for (std::size_t t = 0; t < vars.size(); ++t) m[vars[t]] += levels.exponents(l, c)[t];
          if (total_degree(m) > u_trunc) continue;
          out[{i + l, m}] += b;
        }
      }
    }
  }
  return out;
}

BettiIdentityReport verify_betti_identity(int n, const std::vector<Mask>& gens, Field k,
                                          int t_trunc, int u_trunc) {
  if (t_trunc < 0 || u_trunc < 0) throw PreconditionError("truncations must be nonnegative");
  BettiIdentityReport rep;
  const MultigradedBetti e = exterior_multigraded_betti(n, gens, k, t_trunc);
  for (int i = 0; i <= t_trunc && i < static_cast<int>(e.steps.size()); ++i) {
    for (const auto& [a, b] : e.steps[i]) {
      if (total_degree(a) <= u_trunc) rep.lhs[{i, a}] = b;
    }
  }
  rep.rhs = expand_symmetric_series(hochster_betti(n, gens, k), n, t_trunc, u_trunc);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

bool multigraded_is_linear(const MultigradedBetti& b) {
  std::optional<int> start;
  for (int i = 0; i < static_cast<int>(b.steps.size()); ++i) {
    for (const auto& [a, v] : b.steps[i]) {
      if (v == 0) continue;
      const int d = total_degree(a) - i;
      if (!start) start = d;
      if (d != *start) return false;
    }
  }
  return true;
}

EagonReinerReport eagon_reiner_check(int n, const std::vector<Mask>& gens, Field k) {
  const SimplicialComplex delta = stanley_reisner_complex(n, minimalize(gens));
  if (delta.is_void()) throw PreconditionError("the unit ideal has no Stanley-Reisner complex");
  std::vector<Mask> dual;
  for (Mask f : delta.facets()) dual.push_back(full(n) & ~f);
  EagonReinerReport rep;
  rep.dual_linear = multigraded_is_linear(hochster_betti(n, dual, k));
  rep.cohen_macaulay = reisner_cm_test(delta, k);
  return rep;
}

// ---------------------------------------------------------------------------
// Presentations and free complexes

void SquareFreePresentation::validate() const {
  auto check_degree = [&](const MultiDegree& a) {
    if (static_cast<int>(a.size()) != n) throw PreconditionError("degree of the wrong length");
    if (!is_squarefree(a)) throw PreconditionError("non-square-free degree encountered");
  };
  for (const auto& a : generator_degrees) check_degree(a);
  for (const auto& a : relation_degrees) check_degree(a);
  if (relations.size() != relation_degrees.size()) throw PreconditionError("relation count mismatch");
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const auto& [g, t] : relations[r]) {
      if (g < 0 || g >= static_cast<int>(generator_degrees.size())) {
        throw PreconditionError("relation refers to a missing generator");
      }
      if (t.coeff.field() != field) throw PreconditionError("coefficient over the wrong field");
      if (t.coeff.is_zero()) throw PreconditionError("zero entry stored");
      if (static_cast<int>(t.monomial.size()) != n) throw PreconditionError("monomial of the wrong length");
      if (add(generator_degrees[g], t.monomial) != relation_degrees[r]) {
        throw PreconditionError("relation is not homogeneous");
      }
    }
  }
}

SquareFreePresentation transfer(const SquareFreePresentation& p, Ring target) {
  p.validate();
  SquareFreePresentation q = p;
  q.ring = target;
  return q;
}

SquareFreePresentation stanley_reisner_presentation(int n, const std::vector<Mask>& gens,
                                                    Field k) {
  SquareFreePresentation p;
  p.field = k;
  p.n = n;
  p.generator_degrees.push_back(MultiDegree(n, 0));
  for (Mask g : gens) {
    p.relation_degrees.push_back(mask_multidegree(g, n));
    p.relations.push_back({{0, Term{k.one(), mask_multidegree(g, n)}}});
  }
  p.validate();
  return p;
}

GradedModule exterior_presented_module(const SquareFreePresentation& p) {
  if (p.ring != Ring::kExterior) throw PreconditionError("presentation is not over E");
  p.validate();
  const int n = p.n;
  const Field k = p.field;
  std::map<MultiDegree, CellData> cells;
  std::map<std::pair<int, Mask>, std::pair<MultiDegree, int>> where;
  for (int g = 0; g < static_cast<int>(p.generator_degrees.size()); ++g) {
    const Mask base = to_mask(p.generator_degrees[g]);
    for (Mask u = 0;; ++u) {
      if ((u & base) == 0) {
        const MultiDegree a = add(p.generator_degrees[g], mask_multidegree(u, n));
        where[{g, u}] = {a, cells[a].count++};
      }
      if (u == full(n)) break;
    }
  }
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    for (Mask w = 0;; ++w) {
      const MultiDegree a = add(p.relation_degrees[r], mask_multidegree(w, n));
      if (!is_squarefree(a)) {
        if (w == full(n)) break;
        continue;
      }
      SparseVec row;
      for (const auto& [g, t] : p.relations[r]) {
        const Mask m = to_mask(t.monomial);
        const int cell = where.at({g, w | m}).second;
        row.emplace_back(cell, t.coeff * sign_scalar(k, product_sign(w, m)));
      }
      canonicalize(row);
      if (!row.empty()) cells[a].relations.push_back(std::move(row));
      if (w == full(n)) break;
    }
  }
  // Cell index -> (generator, u) per degree.
  std::map<MultiDegree, std::vector<std::pair<int, Mask>>> back;
  for (const auto& [key, val] : where) {
    auto& v = back[val.first];
    if (static_cast<int>(v.size()) <= val.second) v.resize(val.second + 1);
    v[val.second] = key;
  }
  CellAction act = [&](int var, const MultiDegree& a, int cell)
      -> std::optional<std::tuple<MultiDegree, int, int>> {
    const auto [g, u] = back.at(a)[cell];
    const Mask bit = Mask{1} << var;
    const auto it = where.find({g, u | bit});
    if ((u & bit) || it == where.end()) return std::nullopt;
    const auto& [b, c] = it->second;
    return std::make_tuple(b, c, product_sign(bit, u));
  };
  return quotient_by_cells(k, n, cells, act);
}

void FreeComplex::validate() const {
  if (maps.size() != degrees.size()) throw PreconditionError("map count mismatch");
  for (int k = 0; k < length(); ++k) {
    for (const auto& a : degrees[k]) {
      if (static_cast<int>(a.size()) != n) throw PreconditionError("degree of the wrong length");
      for (int x : a) {
        if (x < 0) throw PreconditionError("negative degree");
      }
    }
    if (k == 0) continue;
    if (maps[k].size() != degrees[k].size()) throw PreconditionError("map has the wrong size");
    for (std::size_t g = 0; g < maps[k].size(); ++g) {
      for (const auto& [h, t] : maps[k][g]) {
        if (h < 0 || h >= static_cast<int>(degrees[k - 1].size())) {
          throw PreconditionError("map refers to a missing generator");
        }
        if (add(degrees[k - 1][h], t.monomial) != degrees[k][g]) {
          throw PreconditionError("map is not homogeneous");
        }
        if (ring == Ring::kExterior && !is_squarefree(t.monomial)) {
          throw PreconditionError("exterior entry with a repeated variable");
        }
      }
    }
  }
}

bool FreeComplex::d_squared_zero() const {
  for (int k = 2; k < length(); ++k) {
    for (const auto& row : maps[k]) {
      std::map<std::pair<int, MultiDegree>, Scalar> acc;
      for (const auto& [h, t] : row) {
        for (const auto& [h2, t2] : maps[k - 1][h]) {
          Scalar c = t.coeff * t2.coeff;
          if (ring == Ring::kExterior) {
            const int s = product_sign(to_mask(t.monomial), to_mask(t2.monomial));
            if (s == 0) continue;
            c = c * sign_scalar(field, s);
          }
          auto key = std::make_pair(h2, add(t.monomial, t2.monomial));
          auto it = acc.find(key);
          if (it == acc.end()) {
            acc.emplace(key, c);
          } else {
            it->second += c;
          }
        }
      }
      for (const auto& [key, c] : acc) {
        if (!c.is_zero()) return false;
      }
    }
  }
  return true;
}

bool FreeComplex::is_minimal() const {
  for (int k = 1; k < length(); ++k) {
    for (const auto& row : maps[k]) {
      for (const auto& [h, t] : row) {
        if (total_degree(t.monomial) == 0) return false;
      }
    }
  }
  return true;
}

std::vector<std::int64_t> FreeComplex::homology(const MultiDegree& a) const {
  // Cells: generators g with a - deg(g) admissible.
  std::vector<std::vector<int>> cell(length());
  std::vector<std::vector<MultiDegree>> rest(length());
  std::vector<std::map<int, int>> index(length());
  for (int k = 0; k < length(); ++k) {
    for (int g = 0; g < static_cast<int>(degrees[k].size()); ++g) {
      auto u = subtract(a, degrees[k][g]);
      if (!u || (ring == Ring::kExterior && !is_squarefree(*u))) continue;
      index[k][g] = static_cast<int>(cell[k].size());
      cell[k].push_back(g);
      rest[k].push_back(*u);
    }
  }
  std::vector<std::int64_t> rk(length() + 1, 0);
  for (int k = 1; k < length(); ++k) {
    std::vector<SparseVec> rows;
    for (std::size_t c = 0; c < cell[k].size(); ++c) {
      SparseVec row;
      const MultiDegree& u = rest[k][c];
      for (const auto& [h, t] : maps[k][cell[k][c]]) {
        Scalar x = t.coeff;
        if (ring == Ring::kExterior) {
          const int s = product_sign(to_mask(u), to_mask(t.monomial));
          if (s == 0) continue;
          x = x * sign_scalar(field, s);
        }
        row.emplace_back(index[k - 1].at(h), x);
      }
      canonicalize(row);
      rows.push_back(std::move(row));
    }
    rk[k] = rank_of(field, static_cast<int>(rows.size()), static_cast<int>(cell[k - 1].size()), rows);
  }
  std::vector<std::int64_t> h;
  for (int k = 0; k < length(); ++k) {
    h.push_back(static_cast<std::int64_t>(cell[k].size()) - rk[k] - rk[k + 1]);
  }
  return h;
}

bool FreeComplex::is_acyclic() const {
  std::set<MultiDegree> candidates;
  if (ring == Ring::kExterior) {
    for (int k = 1; k + 1 < length(); ++k) {
      for (const auto& d : degrees[k]) {
        for (Mask u = 0;; ++u) {
          candidates.insert(add(d, mask_multidegree(u, n)));
          if (u == full(n)) break;
        }
      }
    }
  } else {
    // Over S the complex in degree a only depends on min(a, top).
    MultiDegree top(n, 0);
    for (const auto& level : degrees) {
      for (const auto& d : level) {
        for (int i = 0; i < n; ++i) top[i] = std::max(top[i], d[i]);
      }
    }
    MultiDegree a(n, 0);
    while (true) {
      candidates.insert(a);
      int i = 0;
      while (i < n && a[i] == top[i]) a[i++] = 0;
      if (i == n) break;
      ++a[i];
    }
  }
  for (const auto& a : candidates) {
    const std::vector<std::int64_t> h = homology(a);
    for (int k = 1; k + 1 < length(); ++k) {
      if (h[k] != 0) return false;
    }
  }
  return true;
}

MultigradedBetti FreeComplex::minimal_betti(int steps) const {
  if (steps > length() - 2) throw PreconditionError("complex too short for the requested steps");
  MultigradedBetti out;
  out.steps.resize(steps + 1);
  std::set<MultiDegree> all;
  for (int k = 0; k <= steps + 1; ++k) all.insert(degrees[k].begin(), degrees[k].end());
  for (const auto& a : all) {
    std::vector<std::vector<int>> gens(steps + 2);
    std::vector<std::map<int, int>> index(steps + 2);
    for (int k = 0; k <= steps + 1; ++k) {
      for (int g = 0; g < static_cast<int>(degrees[k].size()); ++g) {
        if (degrees[k][g] != a) continue;
        index[k][g] = static_cast<int>(gens[k].size());
        gens[k].push_back(g);
      }
    }
    std::vector<std::int64_t> rk(steps + 3, 0);
    for (int k = 1; k <= steps + 1; ++k) {
      std::vector<SparseVec> rows;
      for (int g : gens[k]) {
        SparseVec row;
        for (const auto& [h, t] : maps[k][g]) {
          if (total_degree(t.monomial) == 0) row.emplace_back(index[k - 1].at(h), t.coeff);
        }
        canonicalize(row);
        rows.push_back(std::move(row));
      }
      rk[k] = rank_of(field, static_cast<int>(rows.size()), static_cast<int>(gens[k - 1].size()), rows);
    }
    for (int k = 0; k <= steps; ++k) {
      const std::int64_t b = static_cast<std::int64_t>(gens[k].size()) - rk[k] - rk[k + 1];
      if (b != 0) out.steps[k][a] = b;
    }
  }
  return out;
}

FreeComplex presentation_complex(const SquareFreePresentation& p) {
  p.validate();
  FreeComplex c;
  c.ring = p.ring;
  c.field = p.field;
  c.n = p.n;
  c.degrees = {p.generator_degrees, p.relation_degrees};
  c.maps = {{}, p.relations};
  return c;
}

FreeComplex taylor_complex(int n, const std::vector<Mask>& gens, Field k) {
  const int r = static_cast<int>(gens.size());
  if (r > 20) throw PreconditionError("too many generators for the Taylor complex");
  FreeComplex c;
  c.ring = Ring::kSymmetric;
  c.field = k;
  c.n = n;
  c.degrees.resize(r);
  c.maps.resize(r);
  std::vector<std::map<Mask, int>> index(r);
  std::vector<std::vector<Mask>> subsets(r);
  for (Mask s = 1; r > 0 && s < (Mask{1} << r); ++s) subsets[degree_of(s) - 1].push_back(s);
  auto lcm = [&](Mask s) {
    Mask m = 0;
    for (int j = 0; j < r; ++j) {
      if (s >> j & 1) m |= gens[j];
    }
    return m;
  };
  for (int kpos = 0; kpos < r; ++kpos) {
    for (Mask s : subsets[kpos]) {
      index[kpos][s] = static_cast<int>(c.degrees[kpos].size());
      c.degrees[kpos].push_back(mask_multidegree(lcm(s), n));
    }
  }
  for (int kpos = 1; kpos < r; ++kpos) {
    for (Mask s : subsets[kpos]) {
      std::map<int, Term> row;
      int t = 0;
      for (int j = 0; j < r; ++j) {
        if (!(s >> j & 1)) continue;
        const Mask face = s & ~(Mask{1} << j);
        const Mask m = lcm(s) & ~lcm(face);
        row[index[kpos - 1].at(face)] =
            Term{t % 2 == 0 ? k.one() : -k.one(), mask_multidegree(m, n)};
        ++t;
      }
      c.maps[kpos].push_back(std::move(row));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Monomial submodules and the Cartan total complex

void B0Complex::validate() const {
  if (maps.size() != objects.size()) throw PreconditionError("map count mismatch");
  for (int p = 0; p < length(); ++p) {
    for (Mask a : objects[p]) {
      if (!subset(a, full(n))) throw PreconditionError("object outside the ground set");
    }
    if (p == 0) continue;
    const Matrix& m = maps[p];
    if (m.rows() != static_cast<int>(objects[p].size()) ||
        m.cols() != static_cast<int>(objects[p - 1].size())) {
      throw PreconditionError("map has the wrong shape");
    }
    for (int g = 0; g < m.rows(); ++g) {
      for (const auto& [h, x] : m.row(g)) {
        if (!subset(objects[p - 1][h], objects[p][g])) {
          throw PreconditionError("malformed morphism: supports are not nested");
        }
      }
    }
    if (p >= 2 && !(maps[p] * maps[p - 1]).is_zero()) {
      throw PreconditionError("maps do not compose to zero");
    }
  }
}

std::vector<std::int64_t> B0Complex::homology(Mask w) const {
  std::vector<std::map<int, int>> index(length());
  for (int p = 0; p < length(); ++p) {
    for (int g = 0; g < static_cast<int>(objects[p].size()); ++g) {
      if (subset(objects[p][g], w)) {
        const int next = static_cast<int>(index[p].size());
        index[p][g] = next;
      }
    }
  }
  std::vector<std::int64_t> rk(length() + 1, 0);
  for (int p = 1; p < length(); ++p) {
    std::vector<SparseVec> rows;
    for (const auto& [g, i] : index[p]) {
      SparseVec row;
      for (const auto& [h, x] : maps[p].row(g)) row.emplace_back(index[p - 1].at(h), x);
      canonicalize(row);
      rows.push_back(std::move(row));
    }
    rk[p] = rank_of(field, static_cast<int>(rows.size()), static_cast<int>(index[p - 1].size()), rows);
  }
  std::vector<std::int64_t> h;
  for (int p = 0; p < length(); ++p) {
    h.push_back(static_cast<std::int64_t>(index[p].size()) - rk[p] - rk[p + 1]);
  }
  return h;
}

bool B0Complex::is_acyclic() const {
  for (Mask w = 0;; ++w) {
    const std::vector<std::int64_t> h = homology(w);
    for (int p = 1; p < length(); ++p) {
      if (h[p] != 0) return false;
    }
    if (w == full(n)) break;
  }
  return true;
}

GradedModule B0Complex::cokernel_module() const {
  validate();
  const Field k = field;
  std::map<MultiDegree, CellData> cells;
  std::map<MultiDegree, std::map<int, int>> cell_of;  // degree -> generator -> cell
  std::map<MultiDegree, std::vector<int>> gen_of;
  const std::vector<Mask> empty;
  const std::vector<Mask>& c0 = objects.empty() ? empty : objects[0];
  for (Mask w = 0;; ++w) {
    const MultiDegree a = mask_multidegree(w, n);
    for (int g = 0; g < static_cast<int>(c0.size()); ++g) {
      if (!subset(c0[g], w)) continue;
      cell_of[a][g] = cells[a].count++;
      gen_of[a].push_back(g);
    }
    if (length() > 1) {
      for (int h = 0; h < static_cast<int>(objects[1].size()); ++h) {
        if (!subset(objects[1][h], w)) continue;
        SparseVec row;
        for (const auto& [g, x] : maps[1].row(h)) row.emplace_back(cell_of[a].at(g), x);
        canonicalize(row);
        if (!row.empty()) cells[a].relations.push_back(std::move(row));
      }
    }
    if (w == full(n)) break;
  }
  CellAction act = [&](int var, const MultiDegree& a, int cell)
      -> std::optional<std::tuple<MultiDegree, int, int>> {
    const Mask w = to_mask(a);
    const Mask bit = Mask{1} << var;
    if (w & bit) return std::nullopt;
    const int g = gen_of.at(a)[cell];
    const MultiDegree b = mask_multidegree(w | bit, n);
    return std::make_tuple(b, cell_of.at(b).at(g), product_sign(bit, w));
  };
  return quotient_by_cells(k, n, cells, act);
}

B0Complex squarefree_part(const FreeComplex& c) {
  c.validate();
  B0Complex out;
  out.field = c.field;
  out.n = c.n;
  std::vector<std::map<int, int>> index(c.length());
  for (int k = 0; k < c.length(); ++k) {
    out.objects.emplace_back();
    for (int g = 0; g < static_cast<int>(c.degrees[k].size()); ++g) {
      if (!is_squarefree(c.degrees[k][g])) continue;
      index[k][g] = static_cast<int>(out.objects[k].size());
      out.objects[k].push_back(to_mask(c.degrees[k][g]));
    }
  }
  out.maps.emplace_back(c.field, 0, 0);
  for (int k = 1; k < c.length(); ++k) {
    Matrix m(c.field, static_cast<int>(out.objects[k].size()),
             static_cast<int>(out.objects[k - 1].size()));
    for (const auto& [g, i] : index[k]) {
      for (const auto& [h, t] : c.maps[k][g]) {
        Scalar x = t.coeff;
        if (c.ring == Ring::kExterior) {
          x = x * sign_scalar(c.field, product_sign(to_mask(t.monomial), out.objects[k - 1][index[k - 1].at(h)]));
        }
        m.add(i, index[k - 1].at(h), x);
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

std::vector<CartanTerm> cartan_resolution(Mask a, int steps) {
  if (steps < 0) throw PreconditionError("steps must be nonnegative");
  std::vector<CartanTerm> out;
  const int s = degree_of(a);
  for (int l = 0; l <= steps; ++l) {
    out.push_back({a, l, l == 0 ? 1 : binomial(s + l - 1, l)});
  }
  return out;
}

FreeComplex phi_total(const B0Complex& c, int steps) {
  c.validate();
  const int n = c.n;
  const Field k = c.field;
  const int top = steps + 1;
  FreeComplex out;
  out.ring = Ring::kExterior;
  out.field = k;
  out.n = n;
  out.degrees.resize(top + 1);
  out.maps.resize(top + 1);
  // Divided monomials of L_a, per support size, in local coordinates.
  std::map<int, MonomialLevels> levels;
  auto levels_for = [&](Mask a) -> const MonomialLevels& {
    const int s = degree_of(a);
    auto it = levels.find(s);
    if (it == levels.end()) it = levels.emplace(s, MonomialLevels(s, top)).first;
    return it->second;
  };
  auto vars_of = [&](Mask a) {
    std::vector<int> v;
    for (int j = 0; j < n; ++j) {
      if (a >> j & 1) v.push_back(j);
    }
    return v;
  };
  auto global = [&](Mask a, const std::vector<int>& local) {
    MultiDegree e(n, 0);
    const std::vector<int> v = vars_of(a);
    for (std::size_t t = 0; t < v.size(); ++t) e[v[t]] = local[t];
    return e;
  };
  // Generator ids: (p, g, l, c) -> index at total position p + l.
  std::map<std::tuple<int, int, int, int>, int> id;
  struct Gen {
    int p, g, l, c;
  };
  std::vector<std::vector<Gen>> gens(top + 1);
  for (int total = 0; total <= top; ++total) {
    for (int p = 0; p <= total && p < c.length(); ++p) {
      const int l = total - p;
      for (int g = 0; g < static_cast<int>(c.objects[p].size()); ++g) {
        const Mask a = c.objects[p][g];
        const MonomialLevels& lv = levels_for(a);
        for (int ci = 0; ci < lv.size(l); ++ci) {
          id[{p, g, l, ci}] = static_cast<int>(gens[total].size());
          gens[total].push_back({p, g, l, ci});
          out.degrees[total].push_back(add(mask_multidegree(a, n), global(a, lv.exponents(l, ci))));
        }
      }
    }
  }
  for (int total = 1; total <= top; ++total) {
    for (const Gen& gen : gens[total]) {
      std::map<int, Term> row;
      const Mask a = c.objects[gen.p][gen.g];
      const MonomialLevels& lv = levels_for(a);
      const std::vector<int>& local = lv.exponents(gen.l, gen.c);
      const std::vector<int> vars = vars_of(a);
      // Vertical: (-1)^p sum_j e_j G_(c - eps_j).
      if (gen.l > 0) {
        const Scalar s = gen.p % 2 == 0 ? k.one() : -k.one();
        for (std::size_t t = 0; t < vars.size(); ++t) {
          const int low = lv.lower(gen.l, gen.c, static_cast<int>(t));
          if (low < 0) continue;
          row[id.at({gen.p, gen.g, gen.l - 1, low})] = Term{s, mask_multidegree(Mask{1} << vars[t], n)};
        }
      }
      // Horizontal: lambda * sign(m, a') * (-1)^(|m| l) * m * G'_c with
      // m = a - a', when the support of c lies in a'.
      if (gen.p > 0) {
        const MultiDegree cg = global(a, local);
        for (const auto& [h, lambda] : c.maps[gen.p].row(gen.g)) {
          const Mask b = c.objects[gen.p - 1][h];
          if (!subset(to_mask(cg), b)) continue;
          const Mask m = a & ~b;
          std::vector<int> target_local;
          for (int j : vars_of(b)) target_local.push_back(cg[j]);
          const int ci = levels_for(b).index_of(target_local);
          int s = product_sign(m, b);
          if ((degree_of(m) * gen.l) % 2 == 1) s = -s;
          row[id.at({gen.p - 1, h, gen.l, ci})] = Term{lambda * sign_scalar(k, s), mask_multidegree(m, n)};
        }
      }
      out.maps[total].push_back(std::move(row));
    }
  }
  return out;
}

bool phi_round_trip(const B0Complex& c, int steps) {
  const B0Complex back = squarefree_part(phi_total(c, steps));
  const int len = std::min(c.length(), steps + 2);
  for (int p = 0; p < back.length(); ++p) {
    const std::vector<Mask> expected = p < len ? c.objects[p] : std::vector<Mask>{};
    if (back.objects[p] != expected) return false;
    if (p == 0 || p >= len) continue;
    for (int g = 0; g < back.maps[p].rows(); ++g) {
      if (back.maps[p].row(g) != c.maps[p].row(g)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Mask>> all_squarefree_ideals(int n) {
  if (n < 0 || n > 6) throw PreconditionError("enumeration only for n <= 6");
  std::vector<Mask> masks;
  for (Mask m = 1; m <= full(n); ++m) masks.push_back(m);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    out.push_back(chosen);
    for (std::size_t i = start; i < masks.size(); ++i) {
      bool ok = true;
      for (Mask c : chosen) ok = ok && !subset(c, masks[i]) && !subset(masks[i], c);
      if (!ok) continue;
      chosen.push_back(masks[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace osres
