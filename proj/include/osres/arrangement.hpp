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

#ifndef OSRES_ARRANGEMENT_HPP_
#define OSRES_ARRANGEMENT_HPP_

#include <string>
#include <vector>

#include "osres/exterior.hpp"
#include "osres/scalar.hpp"
#include "osres/series.hpp"

namespace osres {

// Affine hyperplane {x : normal . x + constant = 0}.
struct Hyperplane {
  std::vector<Scalar> normal;
  Scalar constant;
};

class Arrangement {
 public:
  // Validates: at least one hyperplane, normals of length dim, no zero
  // normal, no two proportional affine functionals.
  Arrangement(Field field, int dim, std::vector<Hyperplane> hyperplanes, std::string name = "");

  Field field() const { return field_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(h_.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return h_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // Affine functional as a vector of length dim + 1 (normal, constant).
  std::vector<Scalar> functional(int i) const;

  // Rank of the normals of the hyperplanes in the subset.
  int normal_rank(Mask subset) const;
  // Rank of the affine functionals of the subset.
  int functional_rank(Mask subset) const;
  // True when the hyperplanes of the subset meet.
  bool intersects(Mask subset) const;

  bool is_central() const { return intersects(full_mask()); }
  bool is_essential() const { return normal_rank(full_mask()) == dim_; }
  Mask full_mask() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }

 private:
  Field field_;
  int dim_;
  std::vector<Hyperplane> h_;
  std::string name_;
};

struct CircuitData {
  // Minimal dependent subsets with nonempty intersection.
  std::vector<Mask> dependent_circuits;
  // Minimal subsets with empty intersection.
  std::vector<Mask> empty_min_sets;
};

CircuitData circuits(const Arrangement& a);

// Generators of the Orlik-Solomon ideal over k: the boundary of each
// dependent circuit and the monomial of each minimal empty set.
std::vector<ExteriorElement> os_ideal(const Arrangement& a, Field k);

// Broken circuits C minus its least element under the order, where order[i]
// is the rank of hyperplane i (smaller rank = smaller). An empty order means
// the natural one.
std::vector<Mask> broken_circuits(const Arrangement& a, const std::vector<int>& order = {});

struct NbcBasis {
  std::vector<std::vector<Mask>> monomials;  // by degree
  std::vector<std::int64_t> dims;
};

NbcBasis nbc_basis(const Arrangement& a, const std::vector<int>& order = {});

// Characteristic polynomial. Noncentral arrangements go through the cone
// and are divided by (t - 1).
IntPoly char_poly(const Arrangement& a);
// Rank of the arrangement: the top degree of its Orlik-Solomon algebra.
int os_rank(const Arrangement& a);

// Cone in one more dimension; the new coordinate is last and the hyperplane
// at infinity is appended.
Arrangement cone(const Arrangement& a);
// Dehomogenizes a central arrangement with respect to hyperplane h.
Arrangement decone(const Arrangement& a, int h);

struct ProductDecomposition {
  std::vector<Mask> factors;
  std::vector<bool> central;
};

// Irreducible product factors, from the connected components of the graph
// joining hyperplanes that lie in a common circuit or minimal empty set.
ProductDecomposition product_decompose(const Arrangement& a);

// One linear equation per central factor: the coefficient vector has a 1 on
// every hyperplane of the factor.
std::vector<std::vector<Scalar>> singular_variety_equations(const Arrangement& a, Field k);

// Presentation ideal of the cohomology ring of a closed orientable surface of
// genus g on the variables a_1, b_1, ..., a_g, b_g (a_i = index 2i-2,
// b_i = index 2i-1): a_i a_j and b_i b_j (i < j), a_i b_j (i != j), and
// a_1 b_1 - a_j b_j for j = 2..g.
std::vector<ExteriorElement> surface_algebra_ideal(Field k, int genus);

// Ideal of the cohomology ring of a link complement with the given linking
// numbers, over a field of characteristic 0. The graph G joins i and j when
// l_ij != 0 and must be connected. Generators: e_i e_j for every non-edge,
// and for every fundamental cycle (i_1, ..., i_s) of a breadth-first spanning
// tree, the sum of e_{i_k} e_{i_(k+1)} / l_{i_k i_(k+1)} around the cycle.
std::vector<ExteriorElement> link_complement_ideal(Field k,
                                                   const std::vector<std::vector<long>>& linking);

}  // namespace osres

#endif  // OSRES_ARRANGEMENT_HPP_
