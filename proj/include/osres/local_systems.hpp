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

#ifndef OSRES_LOCAL_SYSTEMS_HPP_
#define OSRES_LOCAL_SYSTEMS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "osres/arrangement.hpp"
#include "osres/module.hpp"

namespace osres {

// Homology of multiplication by the linear form sum_i e[i] e_i on M, by
// degree starting at M.min_degree(): ker(e : M_d -> M_(d+1)) / e M_(d-1).
std::vector<std::int64_t> multiplication_homology(const GradedModule& m,
                                                  const std::vector<Scalar>& e);

// h^j of (A, e) for the Orlik-Solomon algebra A in degrees 0..top.
struct AomotoReport {
  std::vector<Scalar> e;
  std::vector<std::int64_t> dims;
  bool is_zero() const;
};

// A must be an algebra module (min degree 0), e a coefficient vector of
// length n.
AomotoReport aomoto_homology(const GradedModule& a, const std::vector<Scalar>& e);

// e : A_(top-1) -> A_top is not surjective.
bool is_singular(const GradedModule& a, const std::vector<Scalar>& e);

// With H(e, N)_i = h^(top - i), checks that the nonzero H(e, N)_i are
// exactly i = 0..c (or none when e is not singular), and that H(e, N) != 0
// exactly when H(e, N)_0 != 0.
bool verify_contiguity(const GradedModule& a, const std::vector<Scalar>& e, int c);

// For 0 -> N' -> F -> N -> 0 with F free on minimal generators and e != 0,
// checks dim H(e, N')_d = dim H(e, N)_(d-1) in every degree, then repeats
// on N' for the given number of steps.
bool syzygy_shift_check(const GradedModule& n, const std::vector<Scalar>& e, int steps = 1);

// Random degree-1 coefficient vectors for the singular-variety experiments.
// Over Q entries come from {-100..100} minus 0, over F_p from F_p minus 0.
class LinearFormSampler {
 public:
  LinearFormSampler(Field field, std::uint64_t seed) : field_(field), rng_(seed) {}

  Scalar nonzero();
  // Every coordinate nonzero.
  std::vector<Scalar> generic(int n);
  // Generic point of the subspace cut out by the given equations, each a
  // 0/1 vector with disjoint supports: the coordinates of every equation
  // are random nonzero values with one entry solving the equation. Resampled
  // until every coordinate is nonzero.
  std::vector<Scalar> on_subspace(int n, const std::vector<std::vector<Scalar>>& equations);

  std::mt19937_64& engine() { return rng_; }

 private:
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace osres

#endif  // OSRES_LOCAL_SYSTEMS_HPP_
