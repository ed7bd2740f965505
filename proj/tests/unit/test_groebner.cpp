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

#include <algorithm>

#include "osres/arrangement.hpp"
#include "osres/fixtures.hpp"
#include "osres/groebner.hpp"
#include "osres/squarefree.hpp"

using namespace osres;

namespace {

const Field kQ = Field::rationals();

std::vector<ExteriorElement> parse_all(const std::vector<std::string>& names,
                                       const std::vector<std::string>& texts) {
  std::vector<ExteriorElement> out;
  for (const auto& t : texts) out.push_back(parse_exterior(kQ, names, t));
  return out;
}

}  // namespace

TEST_CASE("monomial orders") {
  const MonomialOrder nat = MonomialOrder::natural(3);
  // Higher degree wins under degree lex.
  CHECK(nat.less(0b001, 0b011));
  // e3 is the largest variable under the natural order.
  CHECK(nat.less(0b001, 0b100));
  const MonomialOrder rev = MonomialOrder::from_ranking({0, 1, 2}, MonomialOrder::Rule::kDegLex);
  CHECK(rev.less(0b100, 0b001));
  CHECK_THROWS_AS(MonomialOrder::from_ranking({0, 0, 1}, MonomialOrder::Rule::kLex),
                  PreconditionError);
}

TEST_CASE("the four-variable example") {
  const auto gens = example_ideal_abcd(kQ);
  const MonomialOrder order =
      MonomialOrder::from_ranking(example_ranking_abcd(), MonomialOrder::Rule::kDegLex);
  const GroebnerBasis g = buchberger(gens, order);
  CHECK(is_groebner_basis(g));
  CHECK(initial_ideal(g) == std::vector<Mask>{0b0011, 0b0101, 0b0110});
  const ExteriorElement d = ExteriorElement::monomial(kQ, 4, 0b1000);
  CHECK(is_regular_linear_form(d, gens));
  const auto square = parse_all({"a", "b", "c"}, {"a*b", "a*c", "b*c"});
  CHECK(same_ideal(set_variable_to_zero(gens, 3), square, kQ, 3));
}

TEST_CASE("normal forms vanish on the ideal") {
  const auto gens = os_ideal(cone(central_lines(kQ, 4)), kQ);
  const GroebnerBasis g = buchberger(gens, MonomialOrder::natural(5));
  CHECK(is_groebner_basis(g));
  for (const auto& x : gens) CHECK(normal_form(x, g).is_zero());
  for (const auto& x : gens) {
    const ExteriorElement y = x * ExteriorElement::monomial(kQ, 5, 0b00001);
    CHECK(normal_form(y, g).is_zero());
  }
  CHECK_FALSE(normal_form(ExteriorElement::monomial(kQ, 5, 0b00001), g).is_zero());
}

TEST_CASE("broken circuits give the initial ideal of an OS ideal") {
  for (const Arrangement& a : {cone(central_lines(kQ, 5)), braid_arrangement(kQ, 4)}) {
    CAPTURE(a.name());
    const GroebnerBasis g = buchberger(os_ideal(a, kQ), MonomialOrder::natural(a.size()));
    // The largest variable is e_n, so broken circuits drop the smallest index.
    const auto bc = minimalize(broken_circuits(a));
    std::vector<Mask> in = initial_ideal(g);
    CHECK(minimalize(in) == bc);
  }
}

TEST_CASE("genus two surface relations") {
  const auto gens = surface_algebra_ideal(kQ, 2);
  for (const MonomialOrder& order :
       {MonomialOrder::natural(4),
        MonomialOrder::from_ranking({0, 1, 2, 3}, MonomialOrder::Rule::kDegLex)}) {
    const GroebnerBasis g = buchberger(gens, order);
    const auto in = initial_ideal(g);
    // Every degree-two monomial but the smallest.
    auto deg2 = masks_of_degree(4, 2);
    Mask smallest = deg2[0];
    for (Mask m : deg2) {
      if (order.less(m, smallest)) smallest = m;
    }
    std::vector<Mask> want;
    for (Mask m : deg2) {
      if (m != smallest) want.push_back(m);
    }
    std::vector<Mask> got;
    for (Mask m : in) {
      if (degree_of(m) == 2) got.push_back(m);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
}
