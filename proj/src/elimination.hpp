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

#ifndef OSRES_SRC_ELIMINATION_HPP_
#define OSRES_SRC_ELIMINATION_HPP_

// Raw elimination engines behind linalg.hpp. One engine works on residues,
// the other on primitive integer rows (fraction-free elimination over Q).
// Both expose the same interface so the serial and OpenMP drivers can be
// written once.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace osres::detail {

class FpEliminator {
 public:
  struct Row {
    std::vector<int> idx;
    std::vector<std::uint32_t> val;
    bool empty() const { return idx.empty(); }
  };
  using Acc = std::vector<std::uint32_t>;

  FpEliminator(int cols, std::uint32_t p) : cols_(cols), p_(p), pivot_row_(cols, -1) {}

  int cols() const { return cols_; }
  Acc make_acc() const { return Acc(cols_, 0); }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Row>& basis() const { return basis_; }
  const std::vector<int>& pivot_row() const { return pivot_row_; }

  // Loads row into a zero accumulator; returns its first column or -1.
  int load(Acc& acc, const Row& r) const {
    for (std::size_t k = 0; k < r.idx.size(); ++k) acc[r.idx[k]] = r.val[k];
    return r.empty() ? -1 : r.idx[0];
  }

  // Eliminates pivot columns from start on, stopping at the first nonzero
  // column without a pivot. Returns that column, or -1 when acc became zero.
  int reduce(Acc& acc, int start) const {
    if (start < 0) return -1;
    for (int c = start; c < cols_; ++c) {
      const std::uint32_t a = acc[c];
      if (a == 0) continue;
      const int r = pivot_row_[c];
      if (r < 0) return c;
      const Row& row = basis_[r];
      const std::uint64_t neg = p_ - a;
      for (std::size_t k = 0; k < row.idx.size(); ++k) {
        const int j = row.idx[k];
        acc[j] = static_cast<std::uint32_t>((acc[j] + neg * row.val[k]) % p_);
      }
    }
    return -1;
  }

  // Moves acc[lead..] into a sparse row and zeroes acc.
  Row extract(Acc& acc, int lead, bool normalize) const {
    Row out;
    std::uint64_t inv = 1;
    if (normalize) inv = mod_inverse(acc[lead]);
    for (int c = lead; c < cols_; ++c) {
      if (acc[c] == 0) continue;
      out.idx.push_back(c);
      out.val.push_back(static_cast<std::uint32_t>(acc[c] * inv % p_));
      acc[c] = 0;
    }
    return out;
  }

  // Adds a normalized row whose leading column has no pivot yet.
  void insert(Row r) {
    pivot_row_[r.idx[0]] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(r));
  }

  // Back substitution to reduced echelon form.
  void make_reduced() {
    std::vector<int> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return basis_[a].idx[0] > basis_[b].idx[0]; });
    Acc acc = make_acc();
    for (int r : order) {
      Row& row = basis_[r];
      const int lead = row.idx[0];
      load(acc, row);
      for (int c = lead + 1; c < cols_; ++c) {
        const std::uint32_t a = acc[c];
        if (a == 0 || pivot_row_[c] < 0) continue;
        const Row& piv = basis_[pivot_row_[c]];
        const std::uint64_t neg = p_ - a;
        for (std::size_t k = 0; k < piv.idx.size(); ++k) {
          const int j = piv.idx[k];
          acc[j] = static_cast<std::uint32_t>((acc[j] + neg * piv.val[k]) % p_);
        }
      }
      row = extract(acc, lead, false);
    }
  }

 private:
  std::uint64_t mod_inverse(std::uint64_t a) const {
    std::int64_t t = 0, nt = 1, r = p_, nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return static_cast<std::uint64_t>(t < 0 ? t + p_ : t);
  }

  int cols_;
  std::uint32_t p_;
  std::vector<int> pivot_row_;
  std::vector<Row> basis_;
};

class ZEliminator {
 public:
  struct Row {
    std::vector<int> idx;
    std::vector<mpz_class> val;
    bool empty() const { return idx.empty(); }
  };
  using Acc = std::vector<mpz_class>;

  explicit ZEliminator(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  int cols() const { return cols_; }
  Acc make_acc() const { return Acc(cols_); }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<Row>& basis() const { return basis_; }
  const std::vector<int>& pivot_row() const { return pivot_row_; }

  int load(Acc& acc, const Row& r) const {
    for (std::size_t k = 0; k < r.idx.size(); ++k) acc[r.idx[k]] = r.val[k];
    return r.empty() ? -1 : r.idx[0];
  }

  int reduce(Acc& acc, int start) const {
    if (start < 0) return -1;
    mpz_class q, l, g;
    for (int c = start; c < cols_; ++c) {
      if (sgn(acc[c]) == 0) continue;
      const int r = pivot_row_[c];
      if (r < 0) return c;
      eliminate(acc, c, basis_[r], q, l, g);
    }
    return -1;
  }

  Row extract(Acc& acc, int lead, bool normalize) const {
    Row out;
    for (int c = lead; c < cols_; ++c) {
      if (sgn(acc[c]) == 0) continue;
      out.idx.push_back(c);
      out.val.push_back(acc[c]);
      acc[c] = 0;
    }
    if (normalize) make_primitive(out);
    return out;
  }

  void insert(Row r) {
    pivot_row_[r.idx[0]] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(r));
  }

  void make_reduced() {
    std::vector<int> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return basis_[a].idx[0] > basis_[b].idx[0]; });
    Acc acc = make_acc();
    mpz_class q, l, g;
    for (int r : order) {
      Row& row = basis_[r];
      const int lead = row.idx[0];
      load(acc, row);
      for (int c = lead + 1; c < cols_; ++c) {
        if (sgn(acc[c]) == 0 || pivot_row_[c] < 0) continue;
        eliminate(acc, c, basis_[pivot_row_[c]], q, l, g, lead);
      }
      row = extract(acc, lead, true);
    }
  }

  static void make_primitive(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& v : r.val) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(r.val[0]) < 0) g = -g;
    if (g != 1) {
      for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }

 private:
  // acc <- l*acc - q*row so that acc[c] vanishes. Entries of acc below
  // scale_from are known to be zero, except when scale_from is given
  // explicitly by back substitution, where the row's own lead sits there.
  void eliminate(Acc& acc, int c, const Row& row, mpz_class& q, mpz_class& l,
                 mpz_class& g, int scale_from = -1) const {
    const mpz_class& lead = row.val[0];
    if (mpz_divisible_p(acc[c].get_mpz_t(), lead.get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), acc[c].get_mpz_t(), lead.get_mpz_t());
    } else {
      mpz_gcd(g.get_mpz_t(), acc[c].get_mpz_t(), lead.get_mpz_t());
      mpz_divexact(l.get_mpz_t(), lead.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(q.get_mpz_t(), acc[c].get_mpz_t(), g.get_mpz_t());
      for (int j = scale_from < 0 ? c : scale_from; j < cols_; ++j) {
        if (sgn(acc[j]) != 0) acc[j] *= l;
      }
    }
    for (std::size_t k = 0; k < row.idx.size(); ++k) {
      mpz_submul(acc[row.idx[k]].get_mpz_t(), q.get_mpz_t(), row.val[k].get_mpz_t());
    }
  }

  int cols_;
  std::vector<int> pivot_row_;
  std::vector<Row> basis_;
};

template <class Eliminator>
void echelon_serial(Eliminator& e, const std::vector<typename Eliminator::Row>& rows) {
  auto acc = e.make_acc();
  for (const auto& row : rows) {
    const int lead = e.reduce(acc, e.load(acc, row));
    if (lead >= 0) e.insert(e.extract(acc, lead, true));
  }
}

template <class Eliminator>
void echelon_parallel(Eliminator& e, const std::vector<typename Eliminator::Row>& rows);

extern template void echelon_parallel<FpEliminator>(FpEliminator&,
                                                    const std::vector<FpEliminator::Row>&);
extern template void echelon_parallel<ZEliminator>(ZEliminator&,
                                                   const std::vector<ZEliminator::Row>&);

}  // namespace osres::detail

#endif  // OSRES_SRC_ELIMINATION_HPP_
