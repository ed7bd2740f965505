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

#ifndef OSRES_SCALAR_HPP_
#define OSRES_SCALAR_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace osres {

// Thrown when a documented precondition of a public function is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown on malformed input files or expressions.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of Z/p with p prime and p < 2^31.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
};

class Field;

// An exact field element: either a residue or a rational number.
// Arithmetic between elements of different fields throws.
class Scalar {
 public:
  Scalar() : rep_(mpq_class(0)) {}
  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) { std::get<1>(rep_).canonicalize(); }

  bool is_rational() const { return rep_.index() == 1; }
  const mpq_class& rational() const { return std::get<1>(rep_); }
  const Residue& residue() const { return std::get<0>(rep_); }

  bool is_zero() const;
  bool is_one() const;
  Field field() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> rep_;
};

// A prime field F_p or the rationals. Cheap to copy.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // Parses "Q", "Fp:<p>", "GF(<p>)", "F_<p>" or a bare prime.
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  // Accepts "3", "-2/5".
  Scalar parse_scalar(const std::string& text) const;
  // Maps an element of any field with compatible characteristic into this one.
  Scalar convert(const Scalar& s) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }
  std::string to_string() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

// Arithmetic in Z/p on raw words.
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

}  // namespace osres

#endif  // OSRES_SCALAR_HPP_
