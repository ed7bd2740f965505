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

#include "osres/series.hpp"

#include <stdexcept>

#include "osres/scalar.hpp"

namespace osres {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), o.coeff(i));
  return IntPoly(r);
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), -o.coeff(i));
  return IntPoly(r);
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (c_.empty() || o.c_.empty()) return IntPoly();
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  return IntPoly(r);
}

IntPoly IntPoly::divide_by_linear(std::int64_t a) const {
  if (c_.empty()) return IntPoly();
  // Synthetic division from the top coefficient down.
  std::vector<std::int64_t> q(c_.size() - 1, 0);
  std::int64_t carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = checked_add(c_[i], checked_mul(carry, a));
    q[i - 1] = carry;
  }
  const std::int64_t remainder = checked_add(c_[0], checked_mul(carry, a));
  if (remainder != 0) throw PreconditionError("polynomial is not divisible by (t - a)");
  return IntPoly(q);
}

std::int64_t IntPoly::evaluate(std::int64_t t) const {
  std::int64_t r = 0;
  for (int i = degree(); i >= 0; --i) r = checked_add(checked_mul(r, t), c_[i]);
  return r;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0 || a != 1) out += std::to_string(a);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly characteristic_from_poincare(const std::vector<std::int64_t>& dims, int rank) {
  // t^l * sum_j b_j (-1/t)^j = sum_j (-1)^j b_j t^(l-j).
  std::vector<std::int64_t> c(rank + 1, 0);
  for (int j = 0; j <= rank && j < static_cast<int>(dims.size()); ++j) {
    c[rank - j] = (j & 1) ? -dims[j] : dims[j];
  }
  return IntPoly(c);
}

std::vector<std::int64_t> divide_by_one_minus_t_power(const IntPoly& p, int n, int trunc) {
  std::vector<std::int64_t> s(trunc + 1, 0);
  for (int i = 0; i <= trunc; ++i) s[i] = p.coeff(i);
  // Multiply by 1/(1-t) n times: prefix sums.
  for (int k = 0; k < n; ++k) {
    for (int i = 1; i <= trunc; ++i) s[i] = checked_add(s[i], s[i - 1]);
  }
  return s;
}

}  // namespace osres
