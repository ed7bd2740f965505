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

#ifndef OSRES_MONOMIALS_HPP_
#define OSRES_MONOMIALS_HPP_

#include <vector>

namespace osres {

// Monomials of the polynomial ring (or divided powers) on n variables of
// total degree 0..top, in increasing lexicographic order of exponent
// vectors per degree. lower[d][c][j] is the index of c - eps_j in degree
// d - 1 and raise[d][c][j] the index of c + eps_j in degree d + 1, or -1.
class MonomialLevels {
 public:
  MonomialLevels(int n, int top);

  int num_vars() const { return n_; }
  int top() const { return static_cast<int>(exps_.size()) - 1; }
  int size(int d) const { return d < 0 || d > top() ? 0 : static_cast<int>(exps_[d].size()); }
  const std::vector<int>& exponents(int d, int c) const { return exps_[d][c]; }
  int lower(int d, int c, int j) const { return lower_[d][c][j]; }
  int raise(int d, int c, int j) const { return raise_[d][c][j]; }
  // Index of an exponent vector within its degree, or -1.
  int index_of(const std::vector<int>& e) const;

 private:
  int n_;
  std::vector<std::vector<std::vector<int>>> exps_;
  std::vector<std::vector<std::vector<int>>> lower_;
  std::vector<std::vector<std::vector<int>>> raise_;
};

}  // namespace osres

#endif  // OSRES_MONOMIALS_HPP_
