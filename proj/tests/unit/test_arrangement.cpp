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

#include "osres/arrangement.hpp"
#include "osres/fixtures.hpp"

using namespace osres;

namespace {

const Field kQ = Field::rationals();

IntPoly falling(int m) {
  // t (t - 1) ... (t - m + 1)
  IntPoly p({1});
  for (int i = 0; i < m; ++i) p = p * IntPoly({-i, 1});
  return p;
}

}  // namespace

TEST_CASE("characteristic polynomials of standard families") {
  for (int l = 1; l <= 4; ++l) {
    IntPoly want({1});
    for (int i = 0; i < l; ++i) want = want * IntPoly({-1, 1});
    CHECK(char_poly(boolean_arrangement(kQ, l)) == want);
  }
  for (int n = 3; n <= 7; ++n) {
    CHECK(char_poly(central_lines(kQ, n)) == IntPoly({n - 1, -n, 1}));
    CHECK(char_poly(generic_lines(kQ, n)) == IntPoly({n * (n - 1) / 2, -n, 1}));
  }
  CHECK(char_poly(braid_arrangement(kQ, 4)) == falling(4));
  CHECK(char_poly(central_lines(kQ, 3)).to_string() == "t^2 - 3t + 2");
}

TEST_CASE("coning multiplies by t - 1 and deconing undoes it") {
  for (const Arrangement& a : {central_lines(kQ, 4), generic_lines(kQ, 5), nongeneric_lines(kQ)}) {
    const Arrangement c = cone(a);
    CHECK(c.size() == a.size() + 1);
    CHECK(c.is_central());
    CHECK(char_poly(c) == char_poly(a) * IntPoly({-1, 1}));
    CHECK(char_poly(decone(c, c.size() - 1)) == char_poly(a));
  }
}

TEST_CASE("circuits of small arrangements") {
  const CircuitData c3 = circuits(central_lines(kQ, 3));
  CHECK(c3.dependent_circuits == std::vector<Mask>{0b111});
  CHECK(c3.empty_min_sets.empty());

  const CircuitData g4 = circuits(generic_lines(kQ, 4));
  CHECK(g4.dependent_circuits.empty());
  CHECK(g4.empty_min_sets.size() == 4);

  // Two parallel lines x = 0 and x = 1.
  const Arrangement par(kQ, 2,
                        {{{kQ.one(), kQ.zero()}, kQ.zero()}, {{kQ.one(), kQ.zero()}, -kQ.one()}});
  CHECK(circuits(par).empty_min_sets == std::vector<Mask>{0b11});
}

TEST_CASE("nbc basis counts match the characteristic polynomial") {
  for (const Arrangement& a : arrangement_corpus(kQ)) {
    CAPTURE(a.name());
    const IntPoly chi = char_poly(a);
    const NbcBasis b = nbc_basis(a);
    const int l = os_rank(a);
    for (int d = 0; d <= l; ++d) {
      const std::int64_t c = chi.coeff(a.dim() - d);
      CHECK(b.dims[d] == (d % 2 ? -c : c));
    }
  }
}

TEST_CASE("Orlik-Solomon ideal of three concurrent lines") {
  const auto gens = os_ideal(central_lines(kQ, 3), kQ);
  REQUIRE(gens.size() == 1);
  CHECK(gens[0] == os_boundary(kQ, 3, 0b111));
  // With hyperplane 1 ranked lowest the broken circuit is {2, 3}.
  CHECK(broken_circuits(central_lines(kQ, 3)) == std::vector<Mask>{0b110});
  CHECK(broken_circuits(central_lines(kQ, 3), {2, 1, 0}) == std::vector<Mask>{0b011});
}

TEST_CASE("product decomposition and singular variety") {
  const Arrangement p = product(boolean_arrangement(kQ, 1), central_lines(kQ, 3));
  const ProductDecomposition d = product_decompose(p);
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0] == 0b0001);
  CHECK(d.factors[1] == 0b1110);
  CHECK(singular_variety_equations(p, kQ).size() == 2);
  CHECK(product_decompose(central_lines(kQ, 5)).factors.size() == 1);
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(Arrangement(kQ, 2, {{{kQ.zero(), kQ.zero()}, kQ.one()}}), PreconditionError);
  CHECK_THROWS_AS(decone(generic_lines(kQ, 3), 0), PreconditionError);
}
