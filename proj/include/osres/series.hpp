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

#ifndef OSRES_SERIES_HPP_
#define OSRES_SERIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace osres {

// Integer arithmetic that throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t binomial(int n, int k);

// Polynomial in t with integer coefficients; coeffs[i] multiplies t^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  // Exact quotient by (t - a); throws PreconditionError if not divisible.
  IntPoly divide_by_linear(std::int64_t a) const;
  std::int64_t evaluate(std::int64_t t) const;

  // Formats as "t^2 - 3t + 2".
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

// chi(t) = t^l pi(-1/t), where pi has coefficients dims[0..l].
IntPoly characteristic_from_poincare(const std::vector<std::int64_t>& dims, int rank);

// Coefficients of p(t) / (1-t)^n up to and including t^trunc.
std::vector<std::int64_t> divide_by_one_minus_t_power(const IntPoly& p, int n, int trunc);

}  // namespace osres

#endif  // OSRES_SERIES_HPP_
