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

#include "osres/fixtures.hpp"

#include <utility>

namespace osres {

namespace {

Hyperplane line(Field k, long a, long b, long c) {
  // a x + b y = c
  return Hyperplane{{k.from_int(a), k.from_int(b)}, k.from_int(-c)};
}

}  // namespace

Arrangement boolean_arrangement(Field k, int l) {
  if (l < 1) throw PreconditionError("BOOL needs l >= 1");
  std::vector<Hyperplane> h;
  for (int i = 0; i < l; ++i) {
    std::vector<Scalar> normal(l, k.zero());
    normal[i] = k.one();
    h.push_back({normal, k.zero()});
  }
  return Arrangement(k, l, h, "BOOL" + std::to_string(l));
}

Arrangement central_lines(Field k, int n) {
  if (n < 2) throw PreconditionError("CENTRAL needs n >= 2");
  std::vector<Hyperplane> h = {line(k, 1, 0, 0), line(k, 0, 1, 0)};
  for (int i = 2; i < n; ++i) h.push_back(line(k, 1, i - 1, 0));
  return Arrangement(k, 2, h, "CENTRAL" + std::to_string(n));
}

Arrangement generic_lines(Field k, int n) {
  if (n < 3) throw PreconditionError("GENERIC needs n >= 3");
  std::vector<Hyperplane> h = {line(k, 1, 0, 0), line(k, 0, 1, 0), line(k, 1, 1, 1)};
  for (long i = 3; i < n; ++i) h.push_back(line(k, -i, 1, i * i));
  return Arrangement(k, 2, h, "GENERIC" + std::to_string(n));
}

Arrangement nongeneric_lines(Field k) {
  std::vector<Hyperplane> h = {line(k, 1, 0, 0), line(k, 0, 1, 0), line(k, 1, 1, 0),
                               line(k, 1, 2, 1)};
  return Arrangement(k, 2, h, "NONGENERIC4");
}

Arrangement braid_arrangement(Field k, int m) {
  std::vector<Hyperplane> h;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<Scalar> normal(m, k.zero());
      normal[i] = k.one();
      normal[j] = -k.one();
      h.push_back({normal, k.zero()});
    }
  }
  return Arrangement(k, m, h, "BRAID" + std::to_string(m - 1));
}

Arrangement product(const Arrangement& a1, const Arrangement& a2) {
  if (a1.field() != a2.field()) throw PreconditionError("product of arrangements over different fields");
  const Field k = a1.field();
  const int l = a1.dim() + a2.dim();
  std::vector<Hyperplane> h;
  for (const auto& x : a1.hyperplanes()) {
    std::vector<Scalar> normal = x.normal;
    normal.resize(l, k.zero());
    h.push_back({normal, x.constant});
  }
  for (const auto& x : a2.hyperplanes()) {
    std::vector<Scalar> normal(a1.dim(), k.zero());
    normal.insert(normal.end(), x.normal.begin(), x.normal.end());
    h.push_back({normal, x.constant});
  }
  return Arrangement(k, l, h, a1.name() + "x" + a2.name());
}

Arrangement iterated_cone(const Arrangement& a, int times) {
  Arrangement c = a;
  for (int i = 0; i < times; ++i) c = cone(c);
  c.set_name((times == 1 ? "CONE_" : "CONE" + std::to_string(times) + "_") + a.name());
  return c;
}

std::vector<Arrangement> arrangement_corpus(Field k) {
  std::vector<Arrangement> out;
  for (int l = 1; l <= 4; ++l) out.push_back(boolean_arrangement(k, l));
  for (int n = 3; n <= 7; ++n) out.push_back(central_lines(k, n));
  for (int n = 3; n <= 7; ++n) out.push_back(generic_lines(k, n));
  for (int n = 3; n <= 6; ++n) out.push_back(iterated_cone(central_lines(k, n), 1));
  for (const Arrangement& a : generic_family(k)) {
    if (a.name().rfind("GENERIC", 0) != 0) out.push_back(a);
  }
  out.push_back(product(boolean_arrangement(k, 1), central_lines(k, 3)));
  out.push_back(nongeneric_lines(k));
  out.push_back(braid_arrangement(k, 4));
  return out;
}

std::vector<Arrangement> generic_family(Field k) {
  std::vector<Arrangement> out;
  for (int n = 3; n <= 7; ++n) out.push_back(generic_lines(k, n));
  for (int n = 3; n <= 6; ++n) out.push_back(iterated_cone(generic_lines(k, n), 1));
  for (int n = 3; n <= 5; ++n) out.push_back(iterated_cone(generic_lines(k, n), 2));
  out.push_back(iterated_cone(generic_lines(k, 3), 3));
  out.push_back(iterated_cone(generic_lines(k, 3), 4));
  return out;
}

std::vector<ExteriorElement> example_ideal_abcd(Field k) {
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  return {parse_exterior(k, names, "a*b + c*d"), parse_exterior(k, names, "a*c"),
          parse_exterior(k, names, "b*c")};
}

std::vector<int> example_ranking_abcd() { return {0, 1, 2, 3}; }

std::vector<std::vector<std::vector<long>>> link_corpus() {
  return {
      {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}},
      {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
      {{0, 2, 3, 1}, {2, 0, 1, 0}, {3, 1, 0, -1}, {1, 0, -1, 0}},
  };
}

std::vector<std::string> link_corpus_names() { return {"chain3", "triangle", "square_diagonal"}; }

SquareFreePresentation three_points_presentation(Field k) {
  SquareFreePresentation p;
  p.ring = Ring::kSymmetric;
  p.field = k;
  p.n = 3;
  p.generator_degrees = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  p.relation_degrees = {{1, 1, 1}, {1, 1, 1}};
  p.relations = {
      {{0, Term{k.one(), {1, 0, 0}}}, {1, Term{-k.one(), {0, 1, 0}}}},
      {{1, Term{k.one(), {0, 1, 0}}}, {2, Term{-k.one(), {0, 0, 1}}}},
  };
  p.validate();
  return p;
}

std::vector<B0Fixture> b0_corpus(Field k) {
  std::vector<B0Fixture> out;
  {
    B0Complex c;
    c.field = k;
    c.n = 3;
    c.objects = {{0b011}};
    c.maps = {Matrix(k, 0, 0)};
    out.push_back({"single_e0e1", c});
  }
  {
    B0Complex c;
    c.field = k;
    c.n = 3;
    c.objects = {{0b001}, {0b011}};
    Matrix m(k, 1, 1);
    m.add(0, 0, k.one());
    c.maps = {Matrix(k, 0, 0), m};
    out.push_back({"inclusion_e0e1_e0", c});
  }
  out.push_back({"taylor_three_edges",
                 squarefree_part(taylor_complex(3, {0b011, 0b101, 0b110}, k))});
  out.push_back({"three_points", squarefree_part(presentation_complex(
                                     transfer(three_points_presentation(k), Ring::kExterior)))});
  return out;
}

std::vector<B0Complex> single_inclusions(Field k, int n) {
  std::vector<B0Complex> out;
  const Mask top = (Mask{1} << n) - 1;
  for (Mask b = 0;; ++b) {
    for (Mask a = b;; a = (a - 1) & b) {
      B0Complex c;
      c.field = k;
      c.n = n;
      c.objects = {{a}, {b}};
      Matrix m(k, 1, 1);
      m.add(0, 0, k.one());
      c.maps = {Matrix(k, 0, 0), m};
      out.push_back(std::move(c));
      if (a == 0) break;
    }
    if (b == top) break;
  }
  return out;
}

}  // namespace osres
