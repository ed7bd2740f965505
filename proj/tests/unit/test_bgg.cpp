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

#include <doctest.h>

#include "osres/bgg.hpp"
#include "osres/fixtures.hpp"
#include "osres/resolution.hpp"

using namespace osres;

namespace {

const Field kQ = Field::rationals();

GradedModule os_algebra(const Arrangement& a) { return quotient_module(kQ, a.size(), os_ideal(a, kQ)); }

}  // namespace

TEST_CASE("the linear complex squares to zero") {
  const LinearComplexL l(os_algebra(generic_lines(kQ, 4)), 4);
  CHECK(l.d_squared_zero());
  CHECK(l.term_dim(0, 0) == 1);
}

TEST_CASE("F(A) has the predicted Hilbert function") {
  for (const Arrangement& a : generic_family(kQ)) {
    if (a.size() > 6) continue;
    CAPTURE(a.name());
    const GradedModule alg = os_algebra(a);
    CHECK(f_module_hilbert(alg, 4) == predicted_betti_series(a, 4));
    const LExactnessReport r = verify_L_exactness(alg, os_rank(a) + 3);
    CHECK(r.exact);
    CHECK(r.d_squared_zero);
  }
}

TEST_CASE("F(A) is a commutative module") {
  const SModule f = f_module(os_algebra(central_lines(kQ, 4)), 3);
  CHECK(f.is_commutative());
  // Generated by the top degree of A, which has dimension 3.
  CHECK(f.dim(f.min_degree()) == 3);
}

TEST_CASE("the R strand of F(A) recovers the top degree") {
  const GradedModule alg = os_algebra(central_lines(kQ, 3));
  const SModule f = f_module(alg, 4);
  const RStrand s = bgg_R_strand(f, f.min_degree());
  CHECK(s.d_squared_zero);
}
