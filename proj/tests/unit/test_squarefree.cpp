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
#include "osres/squarefree.hpp"

using namespace osres;

namespace {

const Field kQ = Field::rationals();

}  // namespace

TEST_CASE("simplicial complex basics") {
  const SimplicialComplex path = SimplicialComplex::from_faces(3, {0b011, 0b110, 0b010});
  CHECK(path.facets() == std::vector<Mask>{0b011, 0b110});
  CHECK(path.dimension() == 1);
  CHECK(path.minimal_nonfaces() == std::vector<Mask>{0b101});
  CHECK(alexander_dual(path).facets() == std::vector<Mask>{0b010});
  CHECK(alexander_dual(alexander_dual(path)) == path);
  CHECK(SimplicialComplex::void_complex(2).dimension() == -2);
  CHECK(SimplicialComplex::empty_complex(2).dimension() == -1);
}

TEST_CASE("reduced homology") {
  const SimplicialComplex two_points = SimplicialComplex::from_faces(2, {0b01, 0b10});
  CHECK(reduced_homology(two_points, kQ) == std::vector<std::int64_t>{0, 1});
  const SimplicialComplex circle = SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
  CHECK(reduced_homology(circle, kQ) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(reduced_homology(SimplicialComplex::simplex(3), kQ) == std::vector<std::int64_t>{0, 0, 0, 0});
  CHECK(reduced_homology(SimplicialComplex::empty_complex(3), kQ) == std::vector<std::int64_t>{1});
}

TEST_CASE("Cohen-Macaulay test") {
  CHECK(reisner_cm_test(SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110}), kQ));
  CHECK(reisner_cm_test(SimplicialComplex::from_faces(2, {0b01, 0b10}), kQ));
  CHECK_FALSE(reisner_cm_test(SimplicialComplex::from_faces(4, {0b0011, 0b1100}), kQ));
}

TEST_CASE("Hochster's formula on a principal ideal") {
  const MultigradedBetti s = hochster_betti(2, {0b11}, kQ);
  CHECK(s.coarsen().total(0) == 1);
  for (int i = 1; i < static_cast<int>(s.steps.size()); ++i) CHECK(s.coarsen().total(i) == 0);
  // Over E the ideal (e1 e2) is a copy of K(-2): Betti numbers i + 1.
  const MultigradedBetti e = exterior_multigraded_betti(2, {0b11}, kQ, 4);
  for (int i = 0; i <= 4; ++i) CHECK(e.coarsen().at(i, i + 2) == i + 1);
}

TEST_CASE("Betti identity and Eagon-Reiner on all ideals in three variables") {
  for (const auto& gens : all_squarefree_ideals(3)) {
    CHECK(verify_betti_identity(3, gens, kQ, 3, 6).equal);
    CHECK(eagon_reiner_check(3, gens, kQ).holds());
  }
}

TEST_CASE("transfer round trip and agreement of the three Betti routes") {
  const SquareFreePresentation p = three_points_presentation(kQ);
  const SquareFreePresentation e = transfer(p, Ring::kExterior);
  CHECK(transfer(e, Ring::kSymmetric) == p);
  const GradedModule m = exterior_presented_module(e);
  const B0Complex b0 = squarefree_part(presentation_complex(e));
  const MultigradedBetti direct = multigraded_betti(m, 3);
  const MultigradedBetti via_cokernel = multigraded_betti(b0.cokernel_module(), 3);
  CHECK(direct.coarsen() == via_cokernel.coarsen());
}

TEST_CASE("Taylor complex and the Cartan total complex") {
  const FreeComplex t = taylor_complex(3, {0b011, 0b101, 0b110}, kQ);
  CHECK(t.d_squared_zero());
  CHECK(t.is_acyclic());
  CHECK_FALSE(t.is_minimal());
  const auto cart = cartan_resolution(0b011, 3);
  REQUIRE(cart.size() == 4);
  for (int l = 0; l < 4; ++l) CHECK(cart[l].rank == l + 1);
  for (const B0Fixture& f : b0_corpus(kQ)) {
    CAPTURE(f.name);
    CHECK(phi_round_trip(f.complex, 3));
    const FreeComplex phi = phi_total(f.complex, 3);
    CHECK(phi.d_squared_zero());
  }
}

TEST_CASE("counting square-free ideals") {
  // Antichains of nonempty subsets: Dedekind numbers minus the unit ideal.
  CHECK(all_squarefree_ideals(1).size() == 2);
  CHECK(all_squarefree_ideals(2).size() == 5);
  CHECK(all_squarefree_ideals(3).size() == 19);
}
