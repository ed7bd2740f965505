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

#ifndef OSRES_BGG_HPP_
#define OSRES_BGG_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "osres/linalg.hpp"
#include "osres/module.hpp"
#include "osres/monomials.hpp"

namespace osres {

// Graded module over S = K[x_1..x_n] known in finitely many degrees, with
// x_var : M_d -> M_(d+1) given on basis vectors. Degrees past max_degree()
// are unknown, not zero.
class SModule {
 public:
  SModule(Field field, int num_vars, int min_degree, std::vector<int> dims);
  Field field() const { return field_; }
  int num_vars() const { return n_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int d) const;
  const SparseVec& act(int var, int d, int j) const;
  void set_action(int var, int d, int j, SparseVec image);
  SparseVec apply(int var, int d, const SparseVec& v) const;
  // x_i x_j = x_j x_i wherever both sides are defined.
  bool is_commutative() const;

 private:
  Field field_;
  int n_;
  int min_;
  std::vector<int> dims_;
  std::vector<std::vector<std::vector<SparseVec>>> actions_;  // [d - min][var][j]
};

// The linear complex L(P) = ... -> S (x) P_i -> S (x) P_(i+1) -> ... with
// differential 1 (x) p -> sum_j x_j (x) e_j p, for a finite graded E-module P.
// Term (i, s) is S_s (x) P_i with basis index c * dim P_i + b for the s-th
// degree monomial c and basis vector b of P_i.
class LinearComplexL {
 public:
  // Monomials of S are prepared up to degree max_s. Throws PreconditionError
  // when P violates the exterior relations.
  LinearComplexL(const GradedModule& p, int max_s);

  const GradedModule& module() const { return p_; }
  int first() const { return p_.min_degree(); }
  int last() const { return p_.max_degree(); }
  int max_s() const { return levels_.top(); }
  std::int64_t term_dim(int i, int s) const;
  // S_s (x) P_i -> S_(s+1) (x) P_(i+1), rows are images of source basis vectors.
  Matrix differential(int i, int s) const;
  // d_(i+1) d_i = 0 in every S-degree s with s + 2 <= max_s.
  bool d_squared_zero() const;

 private:
  GradedModule p_;
  MonomialLevels levels_;
};

// Exactness of L(A) for an algebra A = P graded 0..l, slice by slice. In
// slice k the term at position i is S_(k - l + i) (x) A_i; F(A)_k is the
// cokernel at position l. The internal degree of slice k is k + l, so that
// F(A) is generated in degree l.
struct LExactnessReport {
  bool exact = true;
  // First failure as (position, internal degree).
  std::optional<std::pair<int, int>> failure;
  bool d_squared_zero = true;
  // F(A)_k for k = 0..max_internal_degree - l.
  std::vector<std::int64_t> f_hilbert;
};
LExactnessReport verify_L_exactness(const GradedModule& a, int max_internal_degree,
                                    Backend backend = default_backend());

// dim F(A)_k for k = 0..trunc, with the generator degree l shifted to 0.
std::vector<std::int64_t> f_module_hilbert(const GradedModule& a, int trunc,
                                           Backend backend = default_backend());

// F(A) as an S-module in normalized degrees 0..trunc: each piece is
// S_k (x) A_l modulo the image of S_(k-1) (x) A_(l-1), with basis the
// non-pivot coordinates.
SModule f_module(const GradedModule& a, int trunc);

// Dimensions of Ext^l_S(F(A), S) in S-degrees 0..max_s, computed as the
// cokernel of the dual map S (x) A_1^* -> S (x) A_0^*.
std::vector<std::int64_t> f_module_top_ext(const GradedModule& a, int max_s);

// Strand q of R(M): the terms Hom(E_p, M_i) = (E_p)^* (x) M_i with p + i = q,
// ordered by increasing i, and differential
// u^* (x) v -> sum_(j in u) sign(e_j, u - j) (u - j)^* (x) x_j v.
struct RStrand {
  int q = 0;
  std::vector<int> module_degrees;  // i of each term
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> homology;
  bool d_squared_zero = true;
};
// Terms with M_i past max_degree are dropped, so when the strand is cut off
// there its last homology value is not meaningful.
RStrand bgg_R_strand(const SModule& m, int q);
// (E_p)^* (x) M_i -> (E_(p-1))^* (x) M_(i+1). Basis index u * dim M_i + v
// with u the position of the mask among degree-p masks.
Matrix bgg_R_differential(const SModule& m, int p, int i);

}  // namespace osres

#endif  // OSRES_BGG_HPP_
