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

#ifndef OSRES_EXTERIOR_HPP_
#define OSRES_EXTERIOR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "osres/scalar.hpp"

namespace osres {

// A square-free monomial e_{i1}...e_{ik} (i1 < ... < ik) stored as the bit
// set {i1, ..., ik}. Variables are 0-based.
using Mask = std::uint32_t;

constexpr int kMaxVariables = 30;

inline int degree_of(Mask m) { return __builtin_popcount(m); }

// Sign of the product e_a * e_b rewritten in increasing order, or 0 when
// a and b share a variable.
int product_sign(Mask a, Mask b);

// All masks of the given degree on n variables, in increasing numeric order.
std::vector<Mask> masks_of_degree(int n, int d);

// Element of the exterior algebra E on n generators over a field.
class ExteriorElement {
 public:
  ExteriorElement(Field field, int n);
  static ExteriorElement monomial(Field field, int n, Mask m, Scalar c);
  static ExteriorElement monomial(Field field, int n, Mask m) {
    return monomial(field, n, m, field.one());
  }
  // Linear form sum_i coeffs[i] e_i.
  static ExteriorElement linear(Field field, const std::vector<Scalar>& coeffs);

  Field field() const { return field_; }
  int num_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coefficient(Mask m) const;

  void add_term(Mask m, const Scalar& c);
  ExteriorElement operator+(const ExteriorElement& o) const;
  ExteriorElement operator-(const ExteriorElement& o) const;
  ExteriorElement operator*(const ExteriorElement& o) const;
  ExteriorElement operator*(const Scalar& c) const;
  ExteriorElement operator-() const;
  bool operator==(const ExteriorElement& o) const;
  bool operator!=(const ExteriorElement& o) const { return !(*this == o); }

  // Degree of a homogeneous element; throws PreconditionError otherwise or
  // when zero.
  int degree() const;
  bool is_homogeneous() const;

  // Renders with the given variable names (default e1..en), e.g. "e1*e2 - e1*e3".
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const ExteriorElement& o) const;

  Field field_;
  int n_;
  std::map<Mask, Scalar> terms_;
};

// The Orlik-Solomon boundary of a monomial: the sum over j >= 1 of
// (-1)^j times the monomial with its j-th factor removed. It satisfies
// (e_{i1} - e_{i2}) ... (e_{i(s-1)} - e_{is}) = (-1)^s d(e_{i1} ... e_{is}).
ExteriorElement os_boundary(Field field, int n, Mask m);

std::vector<std::string> default_variable_names(int n);

// Parses sums of terms such as "2*e1*e3 - 1/2*e2*e3" using the given names.
// A term without variables is a constant. Throws ParseError.
ExteriorElement parse_exterior(Field field, const std::vector<std::string>& names,
                               const std::string& text);

}  // namespace osres

#endif  // OSRES_EXTERIOR_HPP_
