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

#include "osres/bgg.hpp"

#include <map>

namespace osres {

SModule::SModule(Field field, int num_vars, int min_degree, std::vector<int> dims)
    : field_(field), n_(num_vars), min_(min_degree), dims_(std::move(dims)) {
  if (n_ < 0) throw PreconditionError("negative number of variables");
  actions_.resize(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] < 0) throw PreconditionError("negative dimension");
    actions_[k].assign(n_, std::vector<SparseVec>(dims_[k]));
  }
}

int SModule::dim(int d) const {
  if (d < min_ || d > max_degree()) return 0;
  return dims_[d - min_];
}

const SparseVec& SModule::act(int var, int d, int j) const {
  return actions_.at(d - min_).at(var).at(j);
}

void SModule::set_action(int var, int d, int j, SparseVec image) {
  if (d >= max_degree()) throw PreconditionError("action out of the known window");
  for (const auto& [c, v] : image) {
    if (c < 0 || c >= dim(d + 1)) throw PreconditionError("action image out of range");
    (void)v;
  }
  actions_.at(d - min_).at(var).at(j) = std::move(image);
}

SparseVec SModule::apply(int var, int d, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [j, c] : v) axpy(out, c, act(var, d, j));
  return out;
}

bool SModule::is_commutative() const {
  for (int d = min_; d + 2 <= max_degree(); ++d) {
    for (int j = 0; j < dim(d); ++j) {
      for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
          const SparseVec ab = apply(b, d + 1, act(a, d, j));
          const SparseVec ba = apply(a, d + 1, act(b, d, j));
          if (ab != ba) return false;
        }
      }
    }
  }
  return true;
}

LinearComplexL::LinearComplexL(const GradedModule& p, int max_s)
    : p_(p), levels_(p.num_vars(), max_s) {
  if (!p.satisfies_exterior_relations()) {
    throw PreconditionError("action does not satisfy the exterior relations");
  }
}

std::int64_t LinearComplexL::term_dim(int i, int s) const {
  return static_cast<std::int64_t>(levels_.size(s)) * p_.dim(i);
}

Matrix LinearComplexL::differential(int i, int s) const {
  if (s + 1 > max_s()) throw PreconditionError("S-degree past the prepared range");
  const int src = p_.dim(i);
  const int dst = p_.dim(i + 1);
  Matrix out(p_.field(), static_cast<int>(term_dim(i, s)), static_cast<int>(term_dim(i + 1, s + 1)));
  if (dst == 0) return out;
  for (int c = 0; c < levels_.size(s); ++c) {
    for (int b = 0; b < src; ++b) {
      SparseVec row;
      for (int j = 0; j < p_.num_vars(); ++j) {
        const int up = levels_.raise(s, c, j);
        for (const auto& [b2, v] : p_.act(j, i, b)) row.emplace_back(up * dst + b2, v);
      }
      canonicalize(row);
      out.set_row(c * src + b, std::move(row));
    }
  }
  return out;
}

bool LinearComplexL::d_squared_zero() const {
  for (int i = first(); i + 2 <= last(); ++i) {
    for (int s = 0; s + 2 <= max_s(); ++s) {
      if (!(differential(i, s) * differential(i + 1, s + 1)).is_zero()) return false;
    }
  }
  return true;
}

namespace {

int algebra_top(const GradedModule& a) {
  if (a.min_degree() != 0) throw PreconditionError("expected an algebra graded from 0");
  return a.max_degree();
}

}  // namespace

LExactnessReport verify_L_exactness(const GradedModule& a, int max_internal_degree,
                                    Backend backend) {
  const int l = algebra_top(a);
  if (max_internal_degree < l) throw PreconditionError("internal degree bound below the rank");
  const int kmax = max_internal_degree - l;
  const LinearComplexL lc(a, kmax + 1);
  // rank of d_i in slice k, i = 0..l-1.
  std::vector<std::pair<int, int>> tasks;
  for (int k = 0; k <= kmax; ++k) {
    for (int i = 0; i < l; ++i) {
      const int s = k - l + i;
      if (s >= 0 && lc.term_dim(i, s) > 0) tasks.emplace_back(k, i);
    }
  }
  std::vector<std::int64_t> ranks(tasks.size(), 0);
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (backend == Backend::kParallel)
  for (long t = 0; t < count; ++t) {
    const auto [k, i] = tasks[t];
    ranks[t] = rank(lc.differential(i, k - l + i), backend);
  }
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (std::size_t t = 0; t < tasks.size(); ++t) rank_of[tasks[t]] = ranks[t];
  auto r = [&](int k, int i) {
    auto it = rank_of.find({k, i});
    return it == rank_of.end() ? std::int64_t{0} : it->second;
  };
  LExactnessReport rep;
  for (int k = 0; k <= kmax; ++k) {
    for (int i = 0; i < l; ++i) {
      const int s = k - l + i;
      if (s < 0) continue;
      const std::int64_t h = lc.term_dim(i, s) - r(k, i) - r(k, i - 1);
      if (h != 0 && rep.exact) {
        rep.exact = false;
        rep.failure = std::make_pair(i, k + l);
      }
    }
    rep.f_hilbert.push_back(lc.term_dim(l, k) - r(k, l - 1));
  }
  rep.d_squared_zero = lc.d_squared_zero();
  return rep;
}

std::vector<std::int64_t> f_module_hilbert(const GradedModule& a, int trunc, Backend backend) {
  const int l = algebra_top(a);
  const LinearComplexL lc(a, trunc);
  std::vector<std::int64_t> out(trunc + 1, 0);
  const long count = trunc + 1;
#pragma omp parallel for schedule(dynamic, 1) if (backend == Backend::kParallel)
  for (long k = 0; k < count; ++k) {
    std::int64_t rk = 0;
    if (l > 0 && k > 0) rk = rank(lc.differential(l - 1, static_cast<int>(k) - 1), backend);
    out[k] = lc.term_dim(l, static_cast<int>(k)) - rk;
  }
  return out;
}

SModule f_module(const GradedModule& a, int trunc) {
  const int l = algebra_top(a);
  const int n = a.num_vars();
  const LinearComplexL lc(a, trunc);
  const MonomialLevels levels(n, trunc);
  const int top = a.dim(l);
  std::vector<Echelon> images;
  std::vector<std::vector<int>> coord;  // column -> quotient basis index or -1
  std::vector<int> dims;
  for (int k = 0; k <= trunc; ++k) {
    const int cols = static_cast<int>(lc.term_dim(l, k));
    Echelon e = (l > 0 && k > 0) ? echelon(lc.differential(l - 1, k - 1), true)
                                 : echelon(Matrix(a.field(), 0, cols), true);
    std::vector<int> idx(cols, -1);
    std::vector<bool> pivot(cols, false);
    for (int p : e.pivots) pivot[p] = true;
    int next = 0;
    for (int c = 0; c < cols; ++c) {
      if (!pivot[c]) idx[c] = next++;
    }
    dims.push_back(next);
    images.push_back(std::move(e));
    coord.push_back(std::move(idx));
  }
  SModule m(a.field(), n, 0, dims);
  for (int k = 0; k < trunc; ++k) {
    std::vector<int> column_of;  // quotient index -> column
    for (int c = 0; c < static_cast<int>(coord[k].size()); ++c) {
      if (coord[k][c] >= 0) column_of.push_back(c);
    }
    for (int q = 0; q < dims[k]; ++q) {
      const int mono = column_of[q] / top;
      const int b = column_of[q] % top;
      for (int j = 0; j < n; ++j) {
        const int up = levels.raise(k, mono, j);
        SparseVec v{{up * top + b, a.field().one()}};
        SparseVec r = reduce_modulo(images[k + 1], v);
        SparseVec image;
        for (const auto& [c, x] : r) image.emplace_back(coord[k + 1][c], x);
        canonicalize(image);
        m.set_action(j, k, q, std::move(image));
      }
    }
  }
  return m;
}

std::vector<std::int64_t> f_module_top_ext(const GradedModule& a, int max_s) {
  algebra_top(a);
  const int n = a.num_vars();
  const MonomialLevels levels(n, max_s);
  const int d0 = a.dim(0), d1 = a.dim(1);
  std::vector<std::int64_t> out;
  for (int s = 0; s <= max_s; ++s) {
    // Transpose of the dual map: rows indexed by the target S_s (x) A_0^*.
    Matrix t(a.field(), levels.size(s) * d0, levels.size(s - 1) * d1);
    for (int c = 0; c < levels.size(s); ++c) {
      for (int b = 0; b < d0; ++b) {
        SparseVec row;
        for (int j = 0; j < n && s > 0; ++j) {
          const int low = levels.lower(s, c, j);
          if (low < 0) continue;
          for (const auto& [b2, v] : a.act(j, 0, b)) row.emplace_back(low * d1 + b2, v);
        }
        canonicalize(row);
        t.set_row(c * d0 + b, std::move(row));
      }
    }
    out.push_back(t.rows() - rank(t));
  }
  return out;
}

Matrix bgg_R_differential(const SModule& m, int p, int i) {
  const int n = m.num_vars();
  const std::vector<Mask> src = masks_of_degree(n, p);
  const int dst_masks = p > 0 ? static_cast<int>(masks_of_degree(n, p - 1).size()) : 0;
  const int mi = m.dim(i), mo = m.dim(i + 1);
  Matrix out(m.field(), static_cast<int>(src.size()) * mi, dst_masks * mo);
  if (p == 0 || mo == 0) return out;
  const Field k = m.field();
  for (std::size_t u = 0; u < src.size(); ++u) {
    for (int v = 0; v < mi; ++v) {
      SparseVec row;
      for (int j = 0; j < n; ++j) {
        if (!(src[u] >> j & 1)) continue;
        const Mask rest = src[u] & ~(Mask{1} << j);
        const Scalar sign = product_sign(Mask{1} << j, rest) > 0 ? k.one() : -k.one();
        const int base = subset_rank(rest) * mo;
        for (const auto& [w, x] : m.act(j, i, v)) row.emplace_back(base + w, sign * x);
      }
      canonicalize(row);
      out.set_row(static_cast<int>(u) * mi + v, std::move(row));
    }
  }
  return out;
}

RStrand bgg_R_strand(const SModule& m, int q) {
  const int n = m.num_vars();
  RStrand st;
  st.q = q;
  for (int i = m.min_degree(); i <= m.max_degree(); ++i) {
    const int p = q - i;
    if (p < 0 || p > n) continue;
    st.module_degrees.push_back(i);
    st.dims.push_back(static_cast<std::int64_t>(masks_of_degree(n, p).size()) * m.dim(i));
  }
  const int terms = static_cast<int>(st.module_degrees.size());
  std::vector<Matrix> maps;
  std::vector<std::int64_t> ranks;
  for (int t = 0; t + 1 < terms; ++t) {
    const int i = st.module_degrees[t];
    maps.push_back(bgg_R_differential(m, q - i, i));
    ranks.push_back(rank(maps.back()));
  }
  // Map leaving the last term, when its target is inside the window.
  std::int64_t last_out = 0;
  if (terms > 0) {
    const int i = st.module_degrees.back();
    if (i < m.max_degree() && q - i > 0) last_out = rank(bgg_R_differential(m, q - i, i));
  }
  for (int t = 0; t < terms; ++t) {
    const std::int64_t out = t + 1 < terms ? ranks[t] : last_out;
    const std::int64_t in = t > 0 ? ranks[t - 1] : 0;
    st.homology.push_back(st.dims[t] - out - in);
  }
  for (std::size_t t = 0; t + 1 < maps.size(); ++t) {
    if (!(maps[t] * maps[t + 1]).is_zero()) st.d_squared_zero = false;
  }
  return st;
}

}  // namespace osres
