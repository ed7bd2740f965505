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

#include "osres/linalg.hpp"

#include <algorithm>
#include <atomic>

#include "elimination.hpp"

namespace osres {

void canonicalize(SparseVec& x) {
  std::stable_sort(x.begin(), x.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(x.size());
  for (auto& [i, v] : x) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(i, std::move(v));
    }
  }
  x = std::move(out);
}

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar s = y[i].second + a * x[j].second;
      if (!s.is_zero()) out.emplace_back(x[j].first, std::move(s));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, v * a);
  return out;
}

Scalar entry(const SparseVec& x, int index) {
  auto it = std::lower_bound(x.begin(), x.end(), index,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != x.end() && it->first == index) return it->second;
  return Scalar();
}

void Matrix::add(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  SparseVec& row = data_[r];
  if (row.empty() || row.back().first < c) {
    row.emplace_back(c, v);
    return;
  }
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

void Matrix::set_row(int r, SparseVec v) {
  canonicalize(v);
  data_[r] = std::move(v);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows());
  for (int r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows()) throw PreconditionError("matrix dimension mismatch");
  Matrix out(field_, rows(), o.cols());
  for (int r = 0; r < rows(); ++r) {
    SparseVec acc;
    for (const auto& [k, v] : data_[r]) axpy(acc, v, o.data_[k]);
    out.data_[r] = std::move(acc);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& r : data_) {
    if (!r.empty()) return false;
  }
  return true;
}

long Matrix::nonzeros() const {
  long n = 0;
  for (const auto& r : data_) n += static_cast<long>(r.size());
  return n;
}

namespace {

std::atomic<Backend> g_backend{Backend::kParallel};

template <class E>
void run(E& e, const std::vector<typename E::Row>& rows, Backend backend) {
  if (backend == Backend::kSerial) {
    detail::echelon_serial(e, rows);
  } else {
    detail::echelon_parallel(e, rows);
  }
}

detail::FpEliminator::Row to_fp(const SparseVec& v) {
  detail::FpEliminator::Row r;
  r.idx.reserve(v.size());
  r.val.reserve(v.size());
  for (const auto& [i, s] : v) {
    r.idx.push_back(i);
    r.val.push_back(s.residue().value);
  }
  return r;
}

detail::ZEliminator::Row to_z(const SparseVec& v) {
  detail::ZEliminator::Row r;
  mpz_class den = 1;
  for (const auto& [i, s] : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s.rational().get_den_mpz_t());
  }
  r.idx.reserve(v.size());
  r.val.reserve(v.size());
  for (const auto& [i, s] : v) {
    r.idx.push_back(i);
    r.val.push_back(s.rational().get_num() * (den / s.rational().get_den()));
  }
  detail::ZEliminator::make_primitive(r);
  return r;
}

Echelon echelon_impl(const Matrix& m, bool reduced, Backend backend, bool rank_only) {
  Echelon out;
  out.cols = m.cols();
  const Field k = m.field();
  std::vector<std::pair<int, int>> order;  // (lead, row index)
  if (k.is_rational()) {
    std::vector<detail::ZEliminator::Row> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
      if (!m.row(r).empty()) rows.push_back(to_z(m.row(r)));
    }
    detail::ZEliminator e(m.cols());
    run(e, rows, backend);
    if (rank_only) {
      out.pivots.resize(e.rank());
      return out;
    }
    if (reduced) e.make_reduced();
    for (int i = 0; i < e.rank(); ++i) order.emplace_back(e.basis()[i].idx[0], i);
    std::sort(order.begin(), order.end());
    for (const auto& [lead, i] : order) {
      const auto& row = e.basis()[i];
      SparseVec v;
      v.reserve(row.idx.size());
      for (std::size_t t = 0; t < row.idx.size(); ++t) {
        v.emplace_back(row.idx[t], Scalar(mpq_class(row.val[t], row.val[0])));
      }
      out.pivots.push_back(lead);
      out.rows.push_back(std::move(v));
    }
  } else {
    const std::uint32_t p = k.characteristic();
    std::vector<detail::FpEliminator::Row> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
      if (!m.row(r).empty()) rows.push_back(to_fp(m.row(r)));
    }
    detail::FpEliminator e(m.cols(), p);
    run(e, rows, backend);
    if (rank_only) {
      out.pivots.resize(e.rank());
      return out;
    }
    if (reduced) e.make_reduced();
    for (int i = 0; i < e.rank(); ++i) order.emplace_back(e.basis()[i].idx[0], i);
    std::sort(order.begin(), order.end());
    for (const auto& [lead, i] : order) {
      const auto& row = e.basis()[i];
      SparseVec v;
      v.reserve(row.idx.size());
      for (std::size_t t = 0; t < row.idx.size(); ++t) {
        v.emplace_back(row.idx[t], Scalar(Residue{row.val[t], p}));
      }
      out.pivots.push_back(lead);
      out.rows.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

Backend default_backend() { return g_backend.load(); }
void set_default_backend(Backend b) { g_backend.store(b); }

Echelon echelon(const Matrix& m, bool reduced, Backend backend) {
  return echelon_impl(m, reduced, backend, false);
}

int rank(const Matrix& m, Backend backend) {
  if (m.rows() > m.cols()) return echelon_impl(m.transpose(), false, backend, true).rank();
  return echelon_impl(m, false, backend, true).rank();
}

std::vector<SparseVec> kernel(const Matrix& m, Backend backend) {
  Echelon e = echelon(m, true, backend);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  // Column f of the reduced form, listed as (row, value).
  std::vector<std::vector<std::pair<int, Scalar>>> column(m.cols());
  for (int i = 0; i < e.rank(); ++i) {
    for (const auto& [c, v] : e.rows[i]) {
      if (!is_pivot[c]) column[c].emplace_back(i, v);
    }
  }
  std::vector<SparseVec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (const auto& [i, val] : column[f]) v.emplace_back(e.pivots[i], -val);
    v.emplace_back(f, m.field().one());
    canonicalize(v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseVec> map_kernel(Field field, const std::vector<SparseVec>& images,
                                  int target_dim, Backend backend) {
  Matrix t(field, target_dim, static_cast<int>(images.size()));
  for (int j = 0; j < static_cast<int>(images.size()); ++j) {
    for (const auto& [i, v] : images[j]) t.add(i, j, v);
  }
  return kernel(t, backend);
}

SparseVec pivot_coordinates(const Echelon& e, const SparseVec& v) {
  SparseVec out;
  std::size_t k = 0;
  for (int i = 0; i < e.rank(); ++i) {
    const int c = e.pivots[i];
    while (k < v.size() && v[k].first < c) ++k;
    if (k < v.size() && v[k].first == c) out.emplace_back(i, v[k].second);
  }
  return out;
}

SparseVec reduce_modulo(const Echelon& e, const SparseVec& v) {
  SparseVec out = v;
  for (int i = 0; i < e.rank(); ++i) {
    Scalar a = entry(out, e.pivots[i]);
    if (!a.is_zero()) axpy(out, -a, e.rows[i]);
  }
  return out;
}

Subspace::Subspace(Field field, int dim)
    : field_(field), ambient_(dim), pivot_row_(dim, -1) {}

SparseVec Subspace::reduce(const SparseVec& v) const {
  SparseVec out = v;
  for (std::size_t k = 0; k < out.size();) {
    const int c = out[k].first;
    const int r = pivot_row_[c];
    if (r < 0) {
      ++k;
      continue;
    }
    axpy(out, -out[k].second, rows_[r]);
    // Rows are reduced, so position k now holds a larger column.
  }
  return out;
}

bool Subspace::add(const SparseVec& v) {
  SparseVec w = reduce(v);
  if (w.empty()) return false;
  w = scaled(w, w.front().second.inverse());
  const int c = w.front().first;
  for (auto& row : rows_) {
    Scalar a = entry(row, c);
    if (!a.is_zero()) axpy(row, -a, w);
  }
  pivot_row_[c] = static_cast<int>(rows_.size());
  pivots_.push_back(c);
  rows_.push_back(std::move(w));
  return true;
}

Echelon Subspace::as_echelon() const {
  Echelon e;
  e.cols = ambient_;
  std::vector<int> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] < pivots_[b]; });
  for (int i : order) {
    e.pivots.push_back(pivots_[i]);
    e.rows.push_back(rows_[i]);
  }
  return e;
}

}  // namespace osres
