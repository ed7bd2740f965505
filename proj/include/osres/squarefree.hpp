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

#ifndef OSRES_SQUAREFREE_HPP_
#define OSRES_SQUAREFREE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "osres/exterior.hpp"
#include "osres/linalg.hpp"
#include "osres/module.hpp"
#include "osres/resolution.hpp"

namespace osres {

// ---------------------------------------------------------------------------
// Simplicial complexes

// A simplicial complex on {0..n-1} stored by its facets. The void complex
// has no faces at all; the empty complex has the single face {}.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_complex(int n) { return SimplicialComplex(n, {0}); }
  static SimplicialComplex simplex(int n);
  // Keeps the inclusion-maximal sets.
  static SimplicialComplex from_faces(int n, const std::vector<Mask>& faces);

  int ground_size() const { return n_; }
  const std::vector<Mask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_face(Mask f) const;
  // All faces in increasing numeric order.
  std::vector<Mask> faces() const;
  // -1 for the empty complex; -2 for the void complex.
  int dimension() const;
  SimplicialComplex restriction(Mask w) const;
  // Requires f to be a face.
  SimplicialComplex link(Mask f) const;
  // Minimal nonfaces.
  std::vector<Mask> minimal_nonfaces() const;
  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

 private:
  SimplicialComplex(int n, std::vector<Mask> facets);
  int n_;
  std::vector<Mask> facets_;  // sorted, pairwise incomparable
};

// Faces are the complements of the nonfaces.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

// Reduced homology: entry k is dim H~_(k-1), for k - 1 = -1..dim. Empty for
// the void complex.
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& d, Field k);

// Reisner's criterion: H~_i(lk F) = 0 for i < dim lk F, for every face F.
bool reisner_cm_test(const SimplicialComplex& d, Field k);

// The complex of sets containing no generator. A generator equal to the empty
// monomial gives the void complex.
SimplicialComplex stanley_reisner_complex(int n, const std::vector<Mask>& gens);

// Minimal generators of a square-free monomial ideal, sorted.
std::vector<Mask> minimalize(const std::vector<Mask>& gens);

// ---------------------------------------------------------------------------
// Betti numbers of square-free monomial ideals

// beta^S_{i,W}(I) = dim H~_(|W|-i-2)(Delta(I) restricted to W) for the ideal
// I itself, steps i = 0..n-1. The unit ideal has beta_{0,0} = 1 only.
MultigradedBetti hochster_betti(int n, const std::vector<Mask>& gens, Field k);

// The same ideal in E, resolved by the resolution engine.
MultigradedBetti exterior_multigraded_betti(int n, const std::vector<Mask>& gens, Field k,
                                            int steps);

// Expands sum beta^S_{i,a} t^i u^a / prod_(j in supp a) (1 - t u_j) through
// t^t_trunc, keeping multidegrees of total degree <= u_trunc.
std::map<std::pair<int, MultiDegree>, std::int64_t> expand_symmetric_series(
    const MultigradedBetti& s_betti, int n, int t_trunc, int u_trunc);

struct BettiIdentityReport {
  bool equal = true;
  std::map<std::pair<int, MultiDegree>, std::int64_t> lhs;
  std::map<std::pair<int, MultiDegree>, std::int64_t> rhs;
};
// Exterior Betti series against the expansion of the symmetric one.
BettiIdentityReport verify_betti_identity(int n, const std::vector<Mask>& gens, Field k,
                                          int t_trunc, int u_trunc);

// Both sides of: the Alexander dual ideal (generated by x^([n] - F) for the
// facets F of Delta(I)) has a linear resolution, and S/I is Cohen-Macaulay.
struct EagonReinerReport {
  bool dual_linear = false;
  bool cohen_macaulay = false;
  bool holds() const { return dual_linear == cohen_macaulay; }
};
EagonReinerReport eagon_reiner_check(int n, const std::vector<Mask>& gens, Field k);

// True when every step i of the table lives in total degree start + i.
bool multigraded_is_linear(const MultigradedBetti& b);

// ---------------------------------------------------------------------------
// Presentations and free complexes with square-free data

enum class Ring { kSymmetric, kExterior };

// Coefficient times monomial; the monomial is an exponent vector.
struct Term {
  Scalar coeff;
  MultiDegree monomial;
  bool operator==(const Term& o) const = default;
};

// Presentation F -> G -> M -> 0: relation r is sum_g entries[r][g] * g.
struct SquareFreePresentation {
  Ring ring = Ring::kSymmetric;
  Field field = Field::rationals();
  int n = 0;
  std::vector<MultiDegree> generator_degrees;
  std::vector<MultiDegree> relation_degrees;
  std::vector<std::map<int, Term>> relations;
  // Degrees square-free, entries homogeneous. Throws PreconditionError.
  void validate() const;
  bool operator==(const SquareFreePresentation& o) const = default;
};

// The same matrix read over the other (or the given) ring.
SquareFreePresentation transfer(const SquareFreePresentation& p, Ring target);

// Presentation of S/I (or E/I): one generator in degree 0, one relation per
// monomial generator.
SquareFreePresentation stanley_reisner_presentation(int n, const std::vector<Mask>& gens,
                                                    Field k);

// The square-free E-module _EM: the cokernel of the matrix over E, modulo
// everything in non-square-free multidegrees (so a generator of degree a
// spans a copy of E e_a). Carries multidegrees.
GradedModule exterior_presented_module(const SquareFreePresentation& p);

// Complex of free modules over S or E. Position k has generators with
// multidegrees degrees[k]; maps[k] (k >= 1) sends generator g of position k
// to sum over (h, term) of term * h in position k - 1.
struct FreeComplex {
  Ring ring = Ring::kSymmetric;
  Field field = Field::rationals();
  int n = 0;
  std::vector<std::vector<MultiDegree>> degrees;
  std::vector<std::vector<std::map<int, Term>>> maps;

  int length() const { return static_cast<int>(degrees.size()); }
  // Each term is homogeneous of the right degree; square-free monomials over E.
  void validate() const;
  bool d_squared_zero() const;
  // No entry with a unit (constant) monomial.
  bool is_minimal() const;
  // Homology dimension at every position in multidegree a, taking the terms
  // past the last position to be zero.
  std::vector<std::int64_t> homology(const MultiDegree& a) const;
  // Zero homology at positions 1..length-2 in every multidegree reachable from
  // the generators of positions up to length-1.
  bool is_acyclic() const;
  // Minimal Betti numbers of the complex's H_0 when the complex is acyclic:
  // the homology of the constant part, through position steps <= length-2.
  MultigradedBetti minimal_betti(int steps) const;
};

FreeComplex presentation_complex(const SquareFreePresentation& p);

// Taylor resolution of the ideal I over S: generator subsets of size k + 1
// at position k, in the degree of their lcm.
FreeComplex taylor_complex(int n, const std::vector<Mask>& gens, Field k);

// ---------------------------------------------------------------------------
// The category of monomial submodules (a)E and scalar inclusions

// Position p holds objects (a)E for the masks objects[p]; maps[p] (p >= 1) is
// a scalar matrix from position p to p - 1, whose entry (g, h) may be nonzero
// only when objects[p-1][h] is contained in objects[p][g].
struct B0Complex {
  Field field = Field::rationals();
  int n = 0;
  std::vector<std::vector<Mask>> objects;
  std::vector<Matrix> maps;  // maps[0] unused

  int length() const { return static_cast<int>(objects.size()); }
  // Checks shapes, nesting and d^2 = 0. Throws PreconditionError.
  void validate() const;
  // Homology at each position in the square-free multidegree w.
  std::vector<std::int64_t> homology(Mask w) const;
  bool is_acyclic() const;
  // H_0 as an E-module with multidegrees, basis the monomials w with the
  // generator's mask contained in w.
  GradedModule cokernel_module() const;
};

// Square-free part of a free complex over S or E. Generators in degrees
// that are not square-free have zero square-free part and are dropped.
B0Complex squarefree_part(const FreeComplex& c);

// Minimal free resolution of (a)E: level l is D_l(L_a) (x) E(-a), rank
// C(|a| + l - 1, l).
struct CartanTerm {
  Mask a = 0;
  int level = 0;
  std::int64_t rank = 0;
};
std::vector<CartanTerm> cartan_resolution(Mask a, int steps);

// Total complex of the Cartan double complex of c, with levels up to
// steps + 1 so that positions 0..steps + 1 are complete.
FreeComplex phi_total(const B0Complex& c, int steps);

// The square-free part of phi_total(c) agrees with c term by term and entry
// by entry.
bool phi_round_trip(const B0Complex& c, int steps);

// All square-free monomial ideals on n variables, as minimal generator sets:
// the antichains of nonempty subsets (the zero ideal included, the unit
// ideal excluded).
std::vector<std::vector<Mask>> all_squarefree_ideals(int n);

}  // namespace osres

#endif  // OSRES_SQUAREFREE_HPP_
