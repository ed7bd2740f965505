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
#include "osres/module.hpp"
#include "osres/resolution.hpp"

using namespace osres;

namespace {

const Field kQ = Field::rationals();

std::vector<ExteriorElement> variables(Field k, int n) {
  std::vector<ExteriorElement> out;
  for (int i = 0; i < n; ++i) out.push_back(ExteriorElement::monomial(k, n, Mask{1} << i));
  return out;
}

}  // namespace

TEST_CASE("the residue field has binomial Betti numbers") {
  for (Field k : {kQ, Field::prime(3)}) {
    for (int n = 1; n <= 4; ++n) {
      const GradedModule field = quotient_module(k, n, variables(k, n));
      const BettiTable b = betti_table(field, 5);
      CHECK(is_linear(b, 0));
      for (int i = 0; i <= 5; ++i) CHECK(b.at(i, i) == binomial(n + i - 1, i));
    }
  }
}

TEST_CASE("free modules have no syzygies") {
  const BettiTable b = betti_table(exterior_module(kQ, 3), 3);
  CHECK(b.total(0) == 1);
  for (int i = 1; i < b.length(); ++i) CHECK(b.total(i) == 0);
}

TEST_CASE("iterated syzygies agree with the direct table") {
  for (const GradedModule& m :
       {quotient_module(kQ, 3, {os_boundary(kQ, 3, 0b111)}),
        quotient_module(kQ, 4, example_ideal_abcd(kQ))}) {
    CHECK(betti_table_iterated(m, 3) == betti_table(m, 3));
  }
}

TEST_CASE("homology module of generic lines") {
  const HomologyModule h = homology_module(generic_lines(kQ, 3), kQ);
  CHECK(h.start == 1);
  const BettiTable b = betti_table(h.module, 4);
  CHECK(is_linear(b, h.start));
  std::vector<std::int64_t> totals;
  for (int i = 0; i < b.length(); ++i) totals.push_back(b.total(i));
  CHECK(totals == std::vector<std::int64_t>{3, 6, 10, 15, 21});
}

TEST_CASE("resolutions match the predicted series across the corpus") {
  for (const Arrangement& a : arrangement_corpus(kQ)) {
    if (a.size() > 7) continue;
    CAPTURE(a.name());
    const HomologyModule h = homology_module(a, kQ);
    const BettiTable b = betti_table(h.module, 3);
    CHECK(is_linear(b, h.start));
    const auto want = predicted_betti_series(a, 3);
    for (int i = 0; i <= 3; ++i) CHECK((i < b.length() ? b.total(i) : 0) == want[i]);
  }
}

TEST_CASE("socle of an Orlik-Solomon algebra sits in the top degree") {
  const Arrangement a = central_lines(kQ, 4);
  const auto dims = socle_dims(quotient_module(kQ, 4, os_ideal(a, kQ)));
  CHECK(dims == std::vector<std::int64_t>{0, 0, 3});
}

TEST_CASE("linearity detection") {
  BettiTable b;
  b.steps = {{{2, 3}}, {{3, 4}}, {{4, 1}, {5, 1}}};
  CHECK_FALSE(is_linear(b, 2));
  CHECK(first_nonlinear_step(b, 2) == 2);
  CHECK(os_ideal_resolution_is_linear(generic_lines(kQ, 4), kQ, 2));
  CHECK_FALSE(os_ideal_resolution_is_linear(nongeneric_lines(kQ), kQ, 2));
}
