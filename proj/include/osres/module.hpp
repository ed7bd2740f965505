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

#ifndef OSRES_MODULE_HPP_
#define OSRES_MODULE_HPP_

#include <string>
#include <vector>

#include "osres/exterior.hpp"
#include "osres/linalg.hpp"
#include "osres/scalar.hpp"

namespace osres {

// Exponent vector in N^n used as a multidegree.
using MultiDegree = std::vector<int>;

MultiDegree mask_multidegree(Mask m, int n);
std::string multidegree_to_string(const MultiDegree& a);

// Position of a mask among all masks of the same degree in increasing
// numeric order.
int subset_rank(Mask m);

// Finite-dimensional graded left module over the exterior algebra on n
// generators of degree 1. Basis vectors are indexed per degree; the action
// of e_i sends degree d to degree d + 1.
class GradedModule {
 public:
  GradedModule(Field field, int num_vars, int min_degree, std::vector<int> dims);

  Field field() const { return field_; }
  int num_vars() const { return n_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int d) const;
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  // Image of basis vector j of degree d under e_var.
  const SparseVec& act(int var, int d, int j) const;
  void set_action(int var, int d, int j, SparseVec image);

  bool has_multidegrees() const { return !mdeg_.empty(); }
  const MultiDegree& multidegree(int d, int j) const { return mdeg_[d - min_][j]; }
  void set_multidegree(int d, int j, MultiDegree m);

  // Optional monomial labels for basis vectors of quotients of E.
  bool has_labels() const { return !labels_.empty(); }
  Mask label(int d, int j) const { return labels_[d - min_][j]; }
  void set_labels(std::vector<std::vector<Mask>> labels) { labels_ = std::move(labels); }

  // e_var applied to an arbitrary vector of degree d.
  SparseVec apply(int var, int d, const SparseVec& v) const;
  // The monomial e_{i1}...e_{ik} (increasing indices) applied to v.
  SparseVec apply_monomial(Mask u, int d, const SparseVec& v) const;
  // Multiplication by the linear form sum_i coeffs[i] e_i.
  SparseVec apply_linear(const std::vector<Scalar>& coeffs, int d, const SparseVec& v) const;

  // Checks e_i e_j + e_j e_i = 0 and e_i^2 = 0 on every basis vector.
  bool satisfies_exterior_relations() const;

  // Same module with every degree increased by s.
  GradedModule shifted(int s) const;
  // Hom_K(M, K): degree -d holds the dual of M_d and e_i acts by the
  // transpose of its action on M.
  GradedModule dual() const;

 private:
  Field field_;
  int n_;
  int min_;
  std::vector<int> dims_;
  // actions_[d - min][var][j]
  std::vector<std::vector<std::vector<SparseVec>>> actions_;
  std::vector<std::vector<MultiDegree>> mdeg_;
  std::vector<std::vector<Mask>> labels_;
};

// E itself.
GradedModule exterior_module(Field field, int n);

// The span of u * g over monomials u and generators g, in degree d, as a
// matrix whose columns are the degree-d monomials in increasing order.
Matrix ideal_span(Field field, int n, const std::vector<ExteriorElement>& gens, int d);

// E/I for a homogeneous ideal I. The basis in each degree is the set of
// standard monomials, where among monomials of equal degree the one with
// the larger mask counts as larger. Carries monomial labels, and
// multidegrees when I is generated by monomials.
GradedModule quotient_module(Field field, int n, const std::vector<ExteriorElement>& gens);

// A graded subspace of E given by reduced echelon bases over the degree-d
// monomials (columns in increasing mask order), as a module. The subspaces
// must be closed under the action.
GradedModule exterior_submodule(Field field, int n, const std::vector<Echelon>& pieces,
                                int min_degree);

// The ideal I as a module.
GradedModule ideal_module(Field field, int n, const std::vector<ExteriorElement>& gens);

// The annihilator (0 : I) as a module, and its reduced echelon pieces.
std::vector<Echelon> annihilator_pieces(Field field, int n,
                                        const std::vector<ExteriorElement>& gens);
GradedModule annihilator_module(Field field, int n, const std::vector<ExteriorElement>& gens);
// Minimal generators of (0 : I), lowest degree first.
std::vector<ExteriorElement> annihilator_generators(Field field, int n,
                                                    const std::vector<ExteriorElement>& gens);

// The ideal of E generated by square-free monomials, with the monomial
// basis and multidegrees.
GradedModule monomial_ideal_module(Field field, int n, const std::vector<Mask>& gens);

// Vectors spanning M_d modulo E_1 M_(d-1), chosen greedily among the
// standard basis vectors in increasing index order.
std::vector<std::vector<int>> minimal_generator_indices(const GradedModule& m);

}  // namespace osres

#endif  // OSRES_MODULE_HPP_
