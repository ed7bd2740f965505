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

#ifndef OSRES_LINALG_HPP_
#define OSRES_LINALG_HPP_

#include <utility>
#include <vector>

#include "osres/scalar.hpp"

namespace osres {

// Sparse vector: (index, value) pairs with strictly increasing indices and no
// zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// y += a * x.
void axpy(SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
Scalar entry(const SparseVec& x, int index);
// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVec& x);

// Row-sparse matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, int rows, int cols)
      : field_(field), cols_(cols), data_(rows) {}

  Field field() const { return field_; }
  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return cols_; }

  // Adds v to entry (r, c). Amortized O(1) when columns arrive in order.
  void add(int r, int c, const Scalar& v);
  void set_row(int r, SparseVec v);
  const SparseVec& row(int r) const { return data_[r]; }
  Scalar at(int r, int c) const { return entry(data_[r], c); }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
  long nonzeros() const;

 private:
  Field field_;
  int cols_;
  std::vector<SparseVec> data_;
};

// Elimination kernels. kSerial is the reference implementation; kParallel
// reduces batches of rows against a frozen basis with OpenMP and merges them
// serially. Both produce the same row space and, in reduced form, the same
// matrix.
enum class Backend { kSerial, kParallel };

Backend default_backend();
void set_default_backend(Backend b);

// Row echelon basis of the row space. Row i has leading entry 1 in column
// pivots[i]; pivots are increasing. When reduced, all other pivot columns
// of each row are zero.
struct Echelon {
  int cols = 0;
  std::vector<int> pivots;
  std::vector<SparseVec> rows;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon echelon(const Matrix& m, bool reduced = true, Backend backend = default_backend());
int rank(const Matrix& m, Backend backend = default_backend());

// Basis of {x : m x = 0}, one vector per non-pivot column of the reduced
// echelon form, with a 1 in that column.
std::vector<SparseVec> kernel(const Matrix& m, Backend backend = default_backend());

// Kernel of the map sending basis vector j to images[j] in K^target_dim.
std::vector<SparseVec> map_kernel(Field field, const std::vector<SparseVec>& images,
                                  int target_dim, Backend backend = default_backend());

// Coordinates of a vector lying in the row space of a reduced echelon form,
// read off at the pivot columns. The caller guarantees membership.
SparseVec pivot_coordinates(const Echelon& e, const SparseVec& v);
// Reduces v modulo the rows of a reduced echelon form.
SparseVec reduce_modulo(const Echelon& e, const SparseVec& v);

// Incrementally built subspace of K^dim, kept in reduced echelon form.
class Subspace {
 public:
  Subspace(Field field, int dim);
  // Returns true when v was independent of the current span.
  bool add(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  Echelon as_echelon() const;

 private:
  Field field_;
  int ambient_;
  std::vector<int> pivot_row_;
  std::vector<int> pivots_;
  std::vector<SparseVec> rows_;
};

}  // namespace osres

#endif  // OSRES_LINALG_HPP_
