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

#ifndef OSRES_FIXTURES_HPP_
#define OSRES_FIXTURES_HPP_

#include <string>
#include <vector>

#include "osres/arrangement.hpp"
#include "osres/exterior.hpp"
#include "osres/squarefree.hpp"

namespace osres {

// Coordinate hyperplanes x_i = 0 in K^l.
Arrangement boolean_arrangement(Field k, int l);
// n lines through the origin of K^2: x = 0, y = 0, x + y = 0, x + 2y = 0, ...
Arrangement central_lines(Field k, int n);
// n affine lines in general position: x = 0, y = 0, x + y = 1, then
// y = i x + i^2 for i = 3..n-1.
Arrangement generic_lines(Field k, int n);
// central_lines(3) together with x + 2y = 1: noncentral and not generic.
Arrangement nongeneric_lines(Field k);
// x_i - x_j = 0 for i < j in K^m (not essential).
Arrangement braid_arrangement(Field k, int m);
// A1 x A2 in the direct sum of the ambient spaces.
Arrangement product(const Arrangement& a1, const Arrangement& a2);
// Applies cone() the given number of times and names the result.
Arrangement iterated_cone(const Arrangement& a, int times);

// The shipped arrangement corpus, all with at most 7 hyperplanes: BOOL1-4,
// CENTRAL3-7, GENERIC3-7, cones and iterated cones, a product, the
// nongeneric affine arrangement and the braid arrangement A3.
std::vector<Arrangement> arrangement_corpus(Field k);
// Subsets used by individual checks.
std::vector<Arrangement> generic_family(Field k);

// (ab + cd, ac, bc) on a, b, c, d = indices 0..3.
std::vector<ExteriorElement> example_ideal_abcd(Field k);
// Lex order with a > b > c > d.
std::vector<int> example_ranking_abcd();

// Linking matrices of three links with connected linking graph: the chain
// 1-2-3, the triangle with unit linking numbers, and a 4-cycle with one
// diagonal and mixed linking numbers.
std::vector<std::vector<std::vector<long>>> link_corpus();
std::vector<std::string> link_corpus_names();

// Presentation of the canonical module of the cone over three points in the
// plane: generators in degrees {1,2}, {0,2}, {0,1}, relations
// x0 g0 - x1 g1 and x1 g1 - x2 g2.
SquareFreePresentation three_points_presentation(Field k);

// Complexes in the category of monomial submodules used by the transfer
// checks: a single object, the inclusion (e0 e1)E -> (e0)E, the square-free
// part of the Taylor complex of (x0x1, x0x2, x1x2), and the three-points
// presentation.
struct B0Fixture {
  std::string name;
  B0Complex complex;
};
std::vector<B0Fixture> b0_corpus(Field k);
// All two-term complexes (b)E -> (a)E with a contained in b, on n variables.
std::vector<B0Complex> single_inclusions(Field k, int n);

}  // namespace osres

#endif  // OSRES_FIXTURES_HPP_
