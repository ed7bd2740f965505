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

#ifndef OSRES_GROEBNER_HPP_
#define OSRES_GROEBNER_HPP_

#include <string>
#include <vector>

#include "osres/exterior.hpp"

namespace osres {

// Total order on square-free monomials. Variables are first renamed so that
// the variable ranked r-th from the top becomes bit n-1-r; monomials are
// then compared by degree and bit pattern (kDegLex) or bit pattern alone
// (kLex). On bit patterns, the higher set bit wins.
class MonomialOrder {
 public:
  enum class Rule { kDegLex, kLex };

  // Natural order: e_i < e_j when i < j.
  static MonomialOrder natural(int n, Rule rule = Rule::kDegLex);
  // ranking lists the variables from largest to smallest.
  static MonomialOrder from_ranking(const std::vector<int>& ranking, Rule rule);

  int num_vars() const { return static_cast<int>(bit_.size()); }
  Rule rule() const { return rule_; }
  Mask key(Mask m) const;
  bool less(Mask a, Mask b) const;

 private:
  MonomialOrder(std::vector<int> bit, Rule rule) : bit_(std::move(bit)), rule_(rule) {}
  std::vector<int> bit_;
  Rule rule_;
};

Mask lead_monomial(const ExteriorElement& f, const MonomialOrder& order);

struct GroebnerBasis {
  MonomialOrder order;
  // Monic, with pairwise non-divisible lead monomials.
  std::vector<ExteriorElement> elements;
  std::vector<Mask> leads;
};

ExteriorElement normal_form(const ExteriorElement& f, const GroebnerBasis& g);

// Buchberger's algorithm with S-pairs and the square pairs x_i * g for
// x_i in the lead monomial of g, processed by increasing degree, followed by
// auto-reduction. On equal leads the earlier element is kept.
GroebnerBasis buchberger(const std::vector<ExteriorElement>& gens, const MonomialOrder& order);

// Every S-pair and square pair of g reduces to zero.
bool is_groebner_basis(const GroebnerBasis& g);

// Lead monomials, minimal under divisibility, in increasing order.
std::vector<Mask> initial_ideal(const GroebnerBasis& g);

// Multiplication by f on E/I is exact.
bool is_regular_linear_form(const ExteriorElement& f, const std::vector<ExteriorElement>& gens);

// Images of the generators in E/(e_var), identified with the exterior
// algebra on the remaining n-1 variables.
std::vector<ExteriorElement> set_variable_to_zero(const std::vector<ExteriorElement>& gens,
                                                  int var);

// The two generator lists span the same ideal in every degree.
bool same_ideal(const std::vector<ExteriorElement>& a, const std::vector<ExteriorElement>& b,
                Field field, int n);

}  // namespace osres

#endif  // OSRES_GROEBNER_HPP_
