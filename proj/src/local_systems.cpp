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

#include "osres/local_systems.hpp"

#include <map>

#include "osres/resolution.hpp"

namespace osres {

namespace {

void check_form(const GradedModule& m, const std::vector<Scalar>& e) {
  if (static_cast<int>(e.size()) != m.num_vars()) {
    throw PreconditionError("linear form has " + std::to_string(e.size()) +
                            " coefficients, expected " + std::to_string(m.num_vars()));
  }
  for (const auto& c : e) {
    if (c.field() != m.field()) throw PreconditionError("linear form over the wrong field");
  }
}

bool is_zero_form(const std::vector<Scalar>& e) {
  for (const auto& c : e) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// rank of e : M_d -> M_(d+1).
std::int64_t multiplication_rank(const GradedModule& m, const std::vector<Scalar>& e, int d) {
  if (m.dim(d) == 0 || m.dim(d + 1) == 0) return 0;
  Matrix mat(m.field(), m.dim(d), m.dim(d + 1));
  for (int j = 0; j < m.dim(d); ++j) {
    mat.set_row(j, m.apply_linear(e, d, {{j, m.field().one()}}));
  }
  return rank(mat);
}

std::map<int, std::int64_t> homology_by_degree(const GradedModule& m,
                                               const std::vector<Scalar>& e) {
  std::map<int, std::int64_t> h;
  const std::vector<std::int64_t> v = multiplication_homology(m, e);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) h[m.min_degree() + static_cast<int>(k)] = v[k];
  }
  return h;
}

}  // namespace

std::vector<std::int64_t> multiplication_homology(const GradedModule& m,
                                                  const std::vector<Scalar>& e) {
  check_form(m, e);
  std::vector<std::int64_t> ranks;
  for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
    ranks.push_back(multiplication_rank(m, e, d));
  }
  std::vector<std::int64_t> h;
  for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
    const int k = d - m.min_degree();
    h.push_back(m.dim(d) - ranks[k] - (k > 0 ? ranks[k - 1] : 0));
  }
  return h;
}

bool AomotoReport::is_zero() const {
  for (auto x : dims) {
    if (x != 0) return false;
  }
  return true;
}

AomotoReport aomoto_homology(const GradedModule& a, const std::vector<Scalar>& e) {
  if (a.min_degree() != 0) throw PreconditionError("expected an algebra graded from 0");
  return {e, multiplication_homology(a, e)};
}

bool is_singular(const GradedModule& a, const std::vector<Scalar>& e) {
  check_form(a, e);
  const int top = a.max_degree();
  return multiplication_rank(a, e, top - 1) < a.dim(top);
}

bool verify_contiguity(const GradedModule& a, const std::vector<Scalar>& e, int c) {
  const AomotoReport r = aomoto_homology(a, e);
  const int top = a.max_degree();
  if (r.is_zero()) return !is_singular(a, e);
  // H(e, N)_i = h^(top - i).
  for (int i = 0; i <= top; ++i) {
    const bool nonzero = r.dims[top - i] != 0;
    if (nonzero != (i <= c)) return false;
  }
  return true;
}

bool syzygy_shift_check(const GradedModule& n, const std::vector<Scalar>& e, int steps) {
  check_form(n, e);
  if (is_zero_form(e)) throw PreconditionError("syzygy shift needs a nonzero linear form");
  GradedModule cur = n;
  for (int s = 0; s < steps; ++s) {
    SyzygyStep step = first_syzygy(cur);
    const auto before = homology_by_degree(cur, e);
    const auto after = homology_by_degree(step.kernel, e);
    std::map<int, std::int64_t> shifted;
    for (const auto& [d, v] : before) shifted[d + 1] = v;
    if (shifted != after) return false;
    cur = std::move(step.kernel);
  }
  return true;
}

Scalar LinearFormSampler::nonzero() {
  if (field_.is_rational()) {
    std::uniform_int_distribution<int> dist(1, 200);
    const int v = dist(rng_);
    return field_.from_int(v <= 100 ? v - 101 : v - 100);
  }
  std::uniform_int_distribution<std::uint32_t> dist(1, field_.characteristic() - 1);
  return field_.from_int(dist(rng_));
}

std::vector<Scalar> LinearFormSampler::generic(int n) {
  std::vector<Scalar> e;
  for (int i = 0; i < n; ++i) e.push_back(nonzero());
  return e;
}

std::vector<Scalar> LinearFormSampler::on_subspace(
    int n, const std::vector<std::vector<Scalar>>& equations) {
  std::vector<Scalar> e = generic(n);
  for (const auto& eq : equations) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
      if (!eq[i].is_zero()) support.push_back(i);
    }
    if (support.empty()) continue;
    if (support.size() == 1) {
      e[support[0]] = field_.zero();
      continue;
    }
    while (true) {
      Scalar sum = field_.zero();
      for (std::size_t k = 0; k + 1 < support.size(); ++k) {
        e[support[k]] = nonzero();
        sum += eq[support[k]] * e[support[k]];
      }
      const int last = support.back();
      e[last] = -sum / eq[last];
      if (!e[last].is_zero()) break;
    }
  }
  return e;
}

}  // namespace osres
