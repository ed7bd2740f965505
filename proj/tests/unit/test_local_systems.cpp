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

#include "osres/fixtures.hpp"
#include "osres/local_systems.hpp"

using namespace osres;

namespace {

std::vector<Scalar> ints(Field k, std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(k.from_int(x));
  return out;
}

}  // namespace

TEST_CASE("Aomoto complex of three concurrent lines") {
  const Field k = Field::rationals();
  const Arrangement a = central_lines(k, 3);
  const GradedModule alg = quotient_module(k, 3, os_ideal(a, k));
  const AomotoReport r = aomoto_homology(alg, ints(k, {1, -1, 0}));
  CHECK(r.dims == std::vector<std::int64_t>{0, 1, 1});
  CHECK(is_singular(alg, ints(k, {2, -1, -1})));
  CHECK_FALSE(is_singular(alg, ints(k, {1, 1, 1})));
  CHECK(aomoto_homology(alg, ints(k, {1, 2, 4})).is_zero());
  CHECK(verify_contiguity(alg, ints(k, {1, -1, 0}), 1));
}

TEST_CASE("samples on the singular variety are singular") {
  const Field k = Field::prime(32003);
  for (const Arrangement& a : {central_lines(k, 5), product(boolean_arrangement(k, 1), central_lines(k, 3))}) {
    CAPTURE(a.name());
    const GradedModule alg = quotient_module(k, a.size(), os_ideal(a, k));
    LinearFormSampler s(k, 7);
    const auto eqs = singular_variety_equations(a, k);
    for (int t = 0; t < 10; ++t) {
      const auto e = s.on_subspace(a.size(), eqs);
      CHECK(is_singular(alg, e));
      CHECK(verify_contiguity(alg, e, static_cast<int>(eqs.size())));
    }
    CHECK_FALSE(is_singular(alg, s.generic(a.size())));
  }
}

TEST_CASE("sampling is reproducible") {
  const Field k = Field::prime(101);
  LinearFormSampler a(k, 42);
  LinearFormSampler b(k, 42);
  CHECK(a.generic(6) == b.generic(6));
}
