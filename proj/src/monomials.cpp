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

#include "osres/monomials.hpp"

#include <algorithm>
#include <numeric>

#include "osres/scalar.hpp"

namespace osres {

MonomialLevels::MonomialLevels(int n, int top) : n_(n) {
  if (n < 0 || top < 0) throw PreconditionError("bad monomial level request");
  exps_.resize(top + 1);
  exps_[0].push_back(std::vector<int>(n, 0));
  for (int d = 1; d <= top; ++d) {
    for (const auto& e : exps_[d - 1]) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> f = e;
        ++f[j];
        exps_[d].push_back(std::move(f));
      }
    }
    std::sort(exps_[d].begin(), exps_[d].end());
    exps_[d].erase(std::unique(exps_[d].begin(), exps_[d].end()), exps_[d].end());
  }
  lower_.resize(top + 1);
  raise_.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    for (const auto& e : exps_[d]) {
      std::vector<int> lo(n, -1), hi(n, -1);
      for (int j = 0; j < n; ++j) {
        std::vector<int> f = e;
        if (d > 0 && f[j] > 0) {
          --f[j];
          lo[j] = index_of(f);
          ++f[j];
        }
        if (d < top) {
          ++f[j];
          hi[j] = index_of(f);
        }
      }
      lower_[d].push_back(std::move(lo));
      raise_[d].push_back(std::move(hi));
    }
  }
}

int MonomialLevels::index_of(const std::vector<int>& e) const {
  if (static_cast<int>(e.size()) != n_) return -1;
  const int d = std::accumulate(e.begin(), e.end(), 0);
  if (d < 0 || d > top()) return -1;
  auto it = std::lower_bound(exps_[d].begin(), exps_[d].end(), e);
  if (it == exps_[d].end() || *it != e) return -1;
  return static_cast<int>(it - exps_[d].begin());
}

}  // namespace osres
