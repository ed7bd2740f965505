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

#include "osres/scalar.hpp"

#include <cctype>
#include <string>

namespace osres {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in Z/p");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

void check_same(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational() ||
      (!a.is_rational() && a.residue().modulus != b.residue().modulus)) {
    throw PreconditionError("arithmetic between scalars of different fields");
  }
}

}  // namespace

bool Scalar::is_zero() const {
  return is_rational() ? sgn(rational()) == 0 : residue().value == 0;
}

bool Scalar::is_one() const {
  return is_rational() ? rational() == 1 : residue().value == 1;
}

Field Scalar::field() const {
  return is_rational() ? Field::rationals() : Field::prime(residue().modulus);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() + o.rational()));
  const std::uint32_t p = residue().modulus;
  return Scalar(Residue{mod_add(residue().value, o.residue().value, p), p});
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() - o.rational()));
  const std::uint32_t p = residue().modulus;
  return Scalar(Residue{mod_sub(residue().value, o.residue().value, p), p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (is_rational()) return Scalar(mpq_class(rational() * o.rational()));
  const std::uint32_t p = residue().modulus;
  return Scalar(Residue{mod_mul(residue().value, o.residue().value, p), p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const std::uint32_t p = residue().modulus;
  return Scalar(Residue{mod_sub(0, residue().value, p), p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / rational()));
  return Scalar(Residue{mod_inv(residue().value, residue().modulus), residue().modulus});
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rational() == o.rational();
  return residue().modulus == o.residue().modulus && residue().value == o.residue().value;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(residue().value);
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic must be a prime below 2^31: " +
                            std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "Q" || t == "QQ" || t == "rationals") return rationals();
  std::string digits = t;
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') {
    digits = t.substr(3, t.size() - 4);
  } else if (t.rfind("Fp:", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("F_", 0) == 0) {
    digits = t.substr(2);
  } else if (t.rfind("GF", 0) == 0) {
    digits = t.substr(2);
  }
  if (digits.empty() || digits.size() > 10) throw ParseError("unknown field: " + text);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unknown field: " + text);
  }
  return prime(std::stoull(digits));
}

Scalar Field::from_int(long v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) {
    throw PreconditionError("denominator " + q.get_den().get_str() +
                            " vanishes in " + to_string());
  }
  std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
  return Scalar(Residue{mod_mul(n, mod_inv(d, p_), p_), p_});
}

Scalar Field::parse_scalar(const std::string& text) const {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty()) throw ParseError("empty number");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad number: " + text);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::convert(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_rational() || s.residue().modulus != p_) {
    throw PreconditionError("cannot convert between fields of different characteristic");
  }
  return s;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace osres
