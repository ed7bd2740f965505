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

#include "osres/exterior.hpp"

#include <cctype>

namespace osres {

int product_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  Mask rest = b;
  while (rest) {
    const int j = __builtin_ctz(rest);
    rest &= rest - 1;
    // Factors of a above j must be moved past e_j.
    inversions += degree_of(a >> j >> 1);
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<Mask> masks_of_degree(int n, int d) {
  std::vector<Mask> out;
  if (d < 0 || d > n) return out;
  if (d == 0) return {0};
  // Gosper's hack enumerates d-subsets in increasing order.
  Mask m = (Mask{1} << d) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

ExteriorElement::ExteriorElement(Field field, int n) : field_(field), n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw PreconditionError("number of exterior variables out of range: " + std::to_string(n));
  }
}

ExteriorElement ExteriorElement::monomial(Field field, int n, Mask m, Scalar c) {
  ExteriorElement e(field, n);
  if (n < kMaxVariables && (m >> n) != 0) throw PreconditionError("monomial uses variable >= n");
  e.add_term(m, c);
  return e;
}

ExteriorElement ExteriorElement::linear(Field field, const std::vector<Scalar>& coeffs) {
  ExteriorElement e(field, static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.add_term(Mask{1} << i, coeffs[i]);
  return e;
}

Scalar ExteriorElement::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void ExteriorElement::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ExteriorElement::check_compatible(const ExteriorElement& o) const {
  if (o.field_ != field_ || o.n_ != n_) {
    throw PreconditionError("exterior elements live in different algebras");
  }
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
  check_compatible(o);
  ExteriorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
  check_compatible(o);
  ExteriorElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

ExteriorElement ExteriorElement::operator*(const ExteriorElement& o) const {
  check_compatible(o);
  ExteriorElement r(field_, n_);
  for (const auto& [a, x] : terms_) {
    for (const auto& [b, y] : o.terms_) {
      const int s = product_sign(a, b);
      if (s == 0) continue;
      r.add_term(a | b, s > 0 ? x * y : -(x * y));
    }
  }
  return r;
}

ExteriorElement ExteriorElement::operator*(const Scalar& c) const {
  ExteriorElement r(field_, n_);
  for (const auto& [m, x] : terms_) r.add_term(m, x * c);
  return r;
}

ExteriorElement ExteriorElement::operator-() const { return *this * (-field_.one()); }

bool ExteriorElement::operator==(const ExteriorElement& o) const {
  return field_ == o.field_ && n_ == o.n_ && terms_ == o.terms_;
}

bool ExteriorElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree_of(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (degree_of(m) != d) return false;
  }
  return true;
}

int ExteriorElement::degree() const {
  if (terms_.empty()) throw PreconditionError("degree of the zero element");
  if (!is_homogeneous()) throw PreconditionError("element is not homogeneous");
  return degree_of(terms_.begin()->first);
}

std::vector<std::string> default_variable_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

std::string ExteriorElement::to_string(const std::vector<std::string>& names) const {
  const std::vector<std::string> v = names.empty() ? default_variable_names(n_) : names;
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Higher degree first, then by mask, for a stable and readable layout.
  std::vector<std::pair<Mask, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return degree_of(a.first) > degree_of(b.first);
  });
  for (const auto& [m, c] : sorted) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (c.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      coeff = mpq_class(-c.rational()).get_str();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (m & (Mask{1} << i)) mono += (mono.empty() ? "" : "*") + v[i];
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

ExteriorElement os_boundary(Field field, int n, Mask m) {
  ExteriorElement r(field, n);
  int j = 0;
  Mask rest = m;
  while (rest) {
    const Mask bit = rest & (~rest + 1);
    rest &= rest - 1;
    ++j;
    r.add_term(m & ~bit, (j & 1) ? -field.one() : field.one());
  }
  return r;
}

namespace {

class ExteriorParser {
 public:
  ExteriorParser(Field field, const std::vector<std::string>& names, const std::string& text)
      : field_(field), names_(names), text_(text) {}

  ExteriorElement parse() {
    ExteriorElement result(field_, static_cast<int>(names_.size()));
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-' at position " + std::to_string(pos_));
      }
      first = false;
      result = result + term() * field_.from_int(sign);
      skip();
    }
    return result;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  ExteriorElement term() {
    const int n = static_cast<int>(names_.size());
    ExteriorElement t = ExteriorElement::monomial(field_, n, 0);
    while (true) {
      skip();
      if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
          ++pos_;
        }
        t = t * field_.parse_scalar(text_.substr(start, pos_ - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          ++pos_;
        }
        const std::string name = text_.substr(start, pos_ - start);
        int index = -1;
        for (int i = 0; i < n; ++i) {
          if (names_[i] == name) index = i;
        }
        if (index < 0) throw ParseError("unknown variable '" + name + "'");
        t = t * ExteriorElement::monomial(field_, n, Mask{1} << index);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  Field field_;
  const std::vector<std::string>& names_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExteriorElement parse_exterior(Field field, const std::vector<std::string>& names,
                               const std::string& text) {
  return ExteriorParser(field, names, text).parse();
}

}  // namespace osres
