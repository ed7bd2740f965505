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

#include "osres/exterior.hpp"
#include "osres/scalar.hpp"

using namespace osres;

TEST_CASE("scalar arithmetic over Q and F_p") {
  const Field q = Field::rationals();
  const Scalar a = q.parse_scalar("3/4");
  CHECK((a * a.inverse()).is_one());
  CHECK((a - a).is_zero());
  CHECK(q.parse_scalar("-6/8") == -a);

  const Field f = Field::prime(7);
  CHECK(f.from_int(3) * f.from_int(5) == f.one());
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.parse_scalar("1/3") == f.from_int(5));
  CHECK_THROWS_AS(Field::prime(4), PreconditionError);
  CHECK_THROWS_AS(q.parse_scalar("1/0"), ParseError);
}

TEST_CASE("product signs follow the permutation parity") {
  CHECK(product_sign(0b01, 0b10) == 1);
  CHECK(product_sign(0b10, 0b01) == -1);
  CHECK(product_sign(0b011, 0b011) == 0);
  // e3 * e1 e2 moves e3 past two factors.
  CHECK(product_sign(0b100, 0b011) == 1);
  CHECK(product_sign(0b010, 0b101) == -1);
  CHECK(masks_of_degree(4, 2).size() == 6);
}

TEST_CASE("exterior multiplication is graded commutative") {
  const Field k = Field::rationals();
  const int n = 4;
  const auto e = [&](int i) { return ExteriorElement::monomial(k, n, Mask{1} << i); };
  CHECK(e(0) * e(1) == -(e(1) * e(0)));
  CHECK((e(2) * e(2)).is_zero());
  const ExteriorElement x = e(0) * e(1) + e(2) * e(3);
  // Degree-two elements commute.
  CHECK(x * x == e(0) * e(1) * e(2) * e(3) * k.from_int(2));
  CHECK(x.degree() == 2);
  CHECK_THROWS_AS((x + e(0)).degree(), PreconditionError);
}

TEST_CASE("parsing round trips") {
  const Field k = Field::rationals();
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  const ExteriorElement x = parse_exterior(k, names, "a*b + c*d - 2*a*c");
  CHECK(parse_exterior(k, names, x.to_string(names)) == x);
  CHECK(parse_exterior(k, names, "b*a") == -parse_exterior(k, names, "a*b"));
  CHECK_THROWS_AS(parse_exterior(k, names, "a*z"), ParseError);
}

TEST_CASE("boundary of a product of differences") {
  const Field k = Field::rationals();
  const int n = 3;
  const auto e = [&](int i) { return ExteriorElement::monomial(k, n, Mask{1} << i); };
  // (e1 - e2)(e2 - e3) = (-1)^3 d(e1 e2 e3) with the stated convention.
  const ExteriorElement lhs = (e(0) - e(1)) * (e(1) - e(2));
  CHECK(lhs == -os_boundary(k, n, 0b111));
}
