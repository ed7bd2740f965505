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

#include "osres/module.hpp"

#include <algorithm>
#include <unordered_map>

#include "osres/series.hpp"

namespace osres {

MultiDegree mask_multidegree(Mask m, int n) {
  MultiDegree a(n, 0);
  for (int i = 0; i < n; ++i) a[i] = (m >> i) & 1;
  return a;
}

std::string multidegree_to_string(const MultiDegree& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

int subset_rank(Mask m) {
  // Increasing numeric order on k-subsets is colex order.
  int r = 0;
  int k = 0;
  while (m) {
    const int c = __builtin_ctz(m);
    m &= m - 1;
    ++k;
    r += static_cast<int>(binomial(c, k));
  }
  return r;
}

GradedModule::GradedModule(Field field, int num_vars, int min_degree, std::vector<int> dims)
    : field_(field), n_(num_vars), min_(min_degree), dims_(std::move(dims)) {
  if (dims_.empty()) dims_.push_back(0);
  actions_.resize(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    actions_[k].assign(n_, std::vector<SparseVec>(dims_[k]));
  }
}

int GradedModule::dim(int d) const {
  if (d < min_ || d > max_degree()) return 0;
  return dims_[d - min_];
}

int GradedModule::total_dim() const {
  int t = 0;
  for (int x : dims_) t += x;
  return t;
}

const SparseVec& GradedModule::act(int var, int d, int j) const {
  return actions_[d - min_][var][j];
}

void GradedModule::set_action(int var, int d, int j, SparseVec image) {
  if (!image.empty() && dim(d + 1) == 0) {
    throw PreconditionError("action leaves the module");
  }
  actions_[d - min_][var][j] = std::move(image);
}

void GradedModule::set_multidegree(int d, int j, MultiDegree m) {
  if (mdeg_.empty()) {
    mdeg_.resize(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) mdeg_[k].resize(dims_[k]);
  }
  mdeg_[d - min_][j] = std::move(m);
}

SparseVec GradedModule::apply(int var, int d, const SparseVec& v) const {
  SparseVec out;
  if (dim(d) == 0) return out;
  for (const auto& [j, c] : v) axpy(out, c, act(var, d, j));
  return out;
}

SparseVec GradedModule::apply_monomial(Mask u, int d, const SparseVec& v) const {
  // e_{i1}(e_{i2}(... e_{ik} v)): apply the largest index first.
  SparseVec cur = v;
  int deg = d;
  for (int i = n_ - 1; i >= 0 && !cur.empty(); --i) {
    if (u >> i & 1) cur = apply(i, deg++, cur);
  }
  return cur;
}

SparseVec GradedModule::apply_linear(const std::vector<Scalar>& coeffs, int d,
                                     const SparseVec& v) const {
  SparseVec out;
  for (int i = 0; i < n_; ++i) {
    if (!coeffs[i].is_zero()) axpy(out, coeffs[i], apply(i, d, v));
  }
  return out;
}

bool GradedModule::satisfies_exterior_relations() const {
  for (int d = min_degree(); d <= max_degree(); ++d) {
    for (int j = 0; j < dim(d); ++j) {
      for (int a = 0; a < n_; ++a) {
        const SparseVec ea = act(a, d, j);
        for (int b = a; b < n_; ++b) {
          SparseVec s = apply(b, d + 1, ea);
          if (b != a) axpy(s, field_.one(), apply(a, d + 1, act(b, d, j)));
          if (!s.empty()) return false;
        }
      }
    }
  }
  return true;
}

GradedModule GradedModule::shifted(int s) const {
  GradedModule m = *this;
  m.min_ += s;
  return m;
}

GradedModule GradedModule::dual() const {
  std::vector<int> dims(dims_.rbegin(), dims_.rend());
  GradedModule out(field_, n_, -max_degree(), dims);
  // e_k on (M_d)^* lands in (M_(d-1))^*; entry i of the image of phi_j is
  // the j-th coordinate of e_k b_i.
  for (int d = min_degree() + 1; d <= max_degree(); ++d) {
    for (int k = 0; k < n_; ++k) {
      std::vector<SparseVec> images(dim(d));
      for (int i = 0; i < dim(d - 1); ++i) {
        for (const auto& [j, c] : act(k, d - 1, i)) images[j].emplace_back(i, c);
      }
      for (int j = 0; j < dim(d); ++j) out.set_action(k, -d, j, std::move(images[j]));
    }
  }
  if (has_multidegrees()) {
    for (int d = min_degree(); d <= max_degree(); ++d) {
      for (int j = 0; j < dim(d); ++j) {
        MultiDegree a = multidegree(d, j);
        for (int& x : a) x = -x;
        out.set_multidegree(-d, j, std::move(a));
      }
    }
  }
  return out;
}

GradedModule exterior_module(Field field, int n) {
  std::vector<int> dims;
  for (int d = 0; d <= n; ++d) dims.push_back(static_cast<int>(binomial(n, d)));
  GradedModule m(field, n, 0, dims);
  std::vector<std::vector<Mask>> labels;
  for (int d = 0; d <= n; ++d) {
    const std::vector<Mask> masks = masks_of_degree(n, d);
    for (int j = 0; j < static_cast<int>(masks.size()); ++j) {
      for (int k = 0; k < n; ++k) {
        const int s = product_sign(Mask{1} << k, masks[j]);
        if (s == 0) continue;
        const Mask t = masks[j] | (Mask{1} << k);
        m.set_action(k, d, j, {{subset_rank(t), s > 0 ? field.one() : -field.one()}});
      }
      m.set_multidegree(d, j, mask_multidegree(masks[j], n));
    }
    labels.push_back(masks);
  }
  m.set_labels(std::move(labels));
  return m;
}

namespace {

void check_generators(Field field, int n, const std::vector<ExteriorElement>& gens) {
  for (const auto& g : gens) {
    if (g.field() != field || g.num_vars() != n) {
      throw PreconditionError("ideal generator lives in a different algebra");
    }
    if (!g.is_homogeneous()) {
      throw PreconditionError("ideal generator is not homogeneous: " + g.to_string());
    }
  }
}

bool all_monomial(const std::vector<ExteriorElement>& gens) {
  for (const auto& g : gens) {
    if (g.terms().size() > 1) return false;
  }
  return true;
}

std::vector<Echelon> trim(std::vector<Echelon> pieces, int& min_degree) {
  while (!pieces.empty() && pieces.back().rank() == 0) pieces.pop_back();
  std::size_t lead = 0;
  while (lead < pieces.size() && pieces[lead].rank() == 0) ++lead;
  min_degree += static_cast<int>(lead);
  pieces.erase(pieces.begin(), pieces.begin() + static_cast<long>(lead));
  return pieces;
}

}  // namespace

Matrix ideal_span(Field field, int n, const std::vector<ExteriorElement>& gens, int d) {
  check_generators(field, n, gens);
  const int cols = static_cast<int>(binomial(n, d));
  int rows = 0;
  for (const auto& g : gens) {
    if (!g.is_zero() && g.degree() <= d) rows += static_cast<int>(binomial(n, d - g.degree()));
  }
  Matrix m(field, rows, cols);
  int r = 0;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (Mask u : masks_of_degree(n, d - g.degree())) {
      SparseVec row;
      for (const auto& [mask, c] : g.terms()) {
        const int s = product_sign(u, mask);
        if (s == 0) continue;
        row.emplace_back(subset_rank(u | mask), s > 0 ? c : -c);
      }
      m.set_row(r++, std::move(row));
    }
  }
  return m;
}

GradedModule quotient_module(Field field, int n, const std::vector<ExteriorElement>& gens) {
  check_generators(field, n, gens);
  std::vector<Echelon> reduced;
  std::vector<std::vector<Mask>> standard;
  std::vector<std::vector<int>> index_of;  // reversed column -> basis index or -1
  for (int d = 0; d <= n; ++d) {
    const Matrix span = ideal_span(field, n, gens, d);
    const int cols = span.cols();
    // Reverse the columns so that larger monomials are pivots first.
    Matrix rev(field, span.rows(), cols);
    for (int r = 0; r < span.rows(); ++r) {
      SparseVec row;
      for (const auto& [c, v] : span.row(r)) row.emplace_back(cols - 1 - c, v);
      rev.set_row(r, std::move(row));
    }
    Echelon e = echelon(rev, true);
    std::vector<bool> pivot(cols, false);
    for (int c : e.pivots) pivot[c] = true;
    const std::vector<Mask> masks = masks_of_degree(n, d);
    std::vector<Mask> basis;
    std::vector<int> idx(cols, -1);
    for (int j = 0; j < cols; ++j) {
      if (!pivot[cols - 1 - j]) {
        idx[cols - 1 - j] = static_cast<int>(basis.size());
        basis.push_back(masks[j]);
      }
    }
    reduced.push_back(std::move(e));
    standard.push_back(std::move(basis));
    index_of.push_back(std::move(idx));
  }
  int top = n;
  while (top > 0 && standard[top].empty()) --top;
  std::vector<int> dims;
  for (int d = 0; d <= top; ++d) dims.push_back(static_cast<int>(standard[d].size()));
  GradedModule m(field, n, 0, dims);
  const bool monomial = all_monomial(gens);
  for (int d = 0; d <= top; ++d) {
    for (int j = 0; j < dims[d]; ++j) {
      const Mask b = standard[d][j];
      if (monomial) m.set_multidegree(d, j, mask_multidegree(b, n));
      if (d == top) continue;
      const int cols = static_cast<int>(binomial(n, d + 1));
      const Echelon& e = reduced[d + 1];
      std::vector<int> row_of(cols, -1);
      for (int i = 0; i < e.rank(); ++i) row_of[e.pivots[i]] = i;
      for (int k = 0; k < n; ++k) {
        const int s = product_sign(Mask{1} << k, b);
        if (s == 0) continue;
        const Scalar sign = s > 0 ? field.one() : -field.one();
        const int c = cols - 1 - subset_rank(b | (Mask{1} << k));
        SparseVec image;
        if (row_of[c] < 0) {
          image.emplace_back(index_of[d + 1][c], sign);
        } else {
          for (const auto& [cc, v] : e.rows[row_of[c]]) {
            if (cc != c) image.emplace_back(index_of[d + 1][cc], -(sign * v));
          }
        }
        canonicalize(image);
        m.set_action(k, d, j, std::move(image));
      }
    }
  }
  standard.resize(top + 1);
  m.set_labels(std::move(standard));
  return m;
}

GradedModule exterior_submodule(Field field, int n, const std::vector<Echelon>& pieces_in,
                                int min_degree) {
  int lo = min_degree;
  const std::vector<Echelon> pieces = trim(pieces_in, lo);
  std::vector<int> dims;
  for (const auto& e : pieces) dims.push_back(e.rank());
  GradedModule m(field, n, pieces.empty() ? 0 : lo, dims);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const int d = lo + static_cast<int>(k);
    const std::vector<Mask> masks = masks_of_degree(n, d);
    for (int j = 0; j < pieces[k].rank(); ++j) {
      const SparseVec& v = pieces[k].rows[j];
      for (int var = 0; var < n; ++var) {
        SparseVec image;
        for (const auto& [c, val] : v) {
          const int s = product_sign(Mask{1} << var, masks[c]);
          if (s == 0) continue;
          image.emplace_back(subset_rank(masks[c] | (Mask{1} << var)), s > 0 ? val : -val);
        }
        canonicalize(image);
        if (image.empty()) continue;
        if (k + 1 >= pieces.size()) throw PreconditionError("subspace is not a submodule");
        SparseVec coords = pivot_coordinates(pieces[k + 1], image);
        m.set_action(var, d, j, std::move(coords));
      }
    }
  }
  return m;
}

GradedModule ideal_module(Field field, int n, const std::vector<ExteriorElement>& gens) {
  check_generators(field, n, gens);
  if (all_monomial(gens)) {
    std::vector<Mask> masks;
    for (const auto& g : gens) {
      if (!g.is_zero()) masks.push_back(g.terms().begin()->first);
    }
    return monomial_ideal_module(field, n, masks);
  }
  std::vector<Echelon> pieces;
  for (int d = 0; d <= n; ++d) pieces.push_back(echelon(ideal_span(field, n, gens, d), true));
  return exterior_submodule(field, n, pieces, 0);
}

std::vector<Echelon> annihilator_pieces(Field field, int n,
                                        const std::vector<ExteriorElement>& gens) {
  check_generators(field, n, gens);
  std::vector<Echelon> pieces;
  for (int d = 0; d <= n; ++d) {
    const std::vector<Mask> masks = masks_of_degree(n, d);
    std::vector<SparseVec> images(masks.size());
    int offset = 0;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      const int e = d + g.degree();
      if (e > n) continue;
      for (std::size_t j = 0; j < masks.size(); ++j) {
        for (const auto& [mask, c] : g.terms()) {
          const int s = product_sign(masks[j], mask);
          if (s == 0) continue;
          images[j].emplace_back(offset + subset_rank(masks[j] | mask), s > 0 ? c : -c);
        }
      }
      offset += static_cast<int>(binomial(n, e));
    }
    for (auto& v : images) canonicalize(v);
    const std::vector<SparseVec> ker = map_kernel(field, images, offset);
    Matrix k(field, static_cast<int>(ker.size()), static_cast<int>(masks.size()));
    for (int r = 0; r < k.rows(); ++r) k.set_row(r, ker[r]);
    pieces.push_back(echelon(k, true));
  }
  return pieces;
}

GradedModule annihilator_module(Field field, int n, const std::vector<ExteriorElement>& gens) {
  return exterior_submodule(field, n, annihilator_pieces(field, n, gens), 0);
}

std::vector<ExteriorElement> annihilator_generators(Field field, int n,
                                                    const std::vector<ExteriorElement>& gens) {
  const std::vector<Echelon> pieces = annihilator_pieces(field, n, gens);
  const GradedModule m = exterior_submodule(field, n, pieces, 0);
  const std::vector<std::vector<int>> idx = minimal_generator_indices(m);
  std::vector<ExteriorElement> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const int d = m.min_degree() + static_cast<int>(k);
    const std::vector<Mask> masks = masks_of_degree(n, d);
    for (int j : idx[k]) {
      ExteriorElement e(field, n);
      for (const auto& [c, v] : pieces[d].rows[j]) e.add_term(masks[c], v);
      out.push_back(std::move(e));
    }
  }
  return out;
}

GradedModule monomial_ideal_module(Field field, int n, const std::vector<Mask>& gens) {
  std::vector<std::vector<Mask>> basis(n + 1);
  std::vector<std::vector<int>> index(n + 1);
  for (int d = 0; d <= n; ++d) {
    const std::vector<Mask> masks = masks_of_degree(n, d);
    index[d].assign(masks.size(), -1);
    for (std::size_t j = 0; j < masks.size(); ++j) {
      bool in = false;
      for (Mask g : gens) in = in || (g & masks[j]) == g;
      if (in) {
        index[d][j] = static_cast<int>(basis[d].size());
        basis[d].push_back(masks[j]);
      }
    }
  }
  int lo = 0;
  while (lo <= n && basis[lo].empty()) ++lo;
  if (lo > n) return GradedModule(field, n, 0, {0});
  std::vector<int> dims;
  for (int d = lo; d <= n; ++d) dims.push_back(static_cast<int>(basis[d].size()));
  GradedModule m(field, n, lo, dims);
  for (int d = lo; d <= n; ++d) {
    for (int j = 0; j < static_cast<int>(basis[d].size()); ++j) {
      const Mask b = basis[d][j];
      m.set_multidegree(d, j, mask_multidegree(b, n));
      for (int k = 0; k < n; ++k) {
        const int s = product_sign(Mask{1} << k, b);
        if (s == 0) continue;
        const Mask t = b | (Mask{1} << k);
        m.set_action(k, d, j,
                     {{index[d + 1][subset_rank(t)], s > 0 ? field.one() : -field.one()}});
      }
    }
  }
  std::vector<std::vector<Mask>> labels(basis.begin() + lo, basis.end());
  m.set_labels(std::move(labels));
  return m;
}

std::vector<std::vector<int>> minimal_generator_indices(const GradedModule& m) {
  std::vector<std::vector<int>> out;
  for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
    Subspace s(m.field(), m.dim(d));
    for (int j = 0; j < m.dim(d - 1); ++j) {
      for (int k = 0; k < m.num_vars(); ++k) s.add(m.act(k, d - 1, j));
    }
    std::vector<int> gens;
    for (int c = 0; c < m.dim(d) && s.dim() < m.dim(d); ++c) {
      if (s.add({{c, m.field().one()}})) gens.push_back(c);
    }
    out.push_back(std::move(gens));
  }
  return out;
}

}  // namespace osres
