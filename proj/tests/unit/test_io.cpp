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

#include <doctest.h>

#include <filesystem>

#include "osres/fixtures.hpp"
#include "osres/io.hpp"

using namespace osres;

#ifndef OSRES_CORPUS_DIR
#error "OSRES_CORPUS_DIR must be defined"
#endif

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

TEST_CASE("arrangements round trip through json") {
  const Field k = Field::rationals();
  for (const Arrangement& a : arrangement_corpus(k)) {
    const Json j = arrangement_to_json(a);
    CHECK(arrangement_to_json(arrangement_from_json(j)) == j);
  }
  const Arrangement f = arrangement_from_json(arrangement_to_json(central_lines(Field::prime(5), 4)));
  CHECK(f.field() == Field::prime(5));
}

TEST_CASE("corpus files match the built-in fixtures") {
  const std::filesystem::path dir = std::filesystem::path(OSRES_CORPUS_DIR) / "arrangements";
  const auto corpus = arrangement_corpus(Field::rationals());
  CHECK(corpus.size() == 30);
  for (const Arrangement& a : corpus) {
    CAPTURE(a.name());
    const Json j = read_json_file((dir / (lower(a.name()) + ".json")).string());
    CHECK(j == arrangement_to_json(a));
  }
}

TEST_CASE("other file formats round trip") {
  const SimplicialComplex d = SimplicialComplex::from_faces(4, {0b0011, 0b0110, 0b1000});
  CHECK(complex_from_json(complex_to_json(d)) == d);
  CHECK(complex_from_json(complex_to_json(SimplicialComplex::void_complex(3))).is_void());

  const MonomialIdealFile m{4, {0b0011, 0b1100}};
  const MonomialIdealFile m2 = monomial_ideal_from_json(monomial_ideal_to_json(m));
  CHECK(m2.n == 4);
  CHECK(m2.gens == m.gens);

  IdealFile f{Field::prime(7), 4, {"a", "b", "c", "d"}, example_ideal_abcd(Field::prime(7))};
  const IdealFile f2 = ideal_from_json(ideal_to_json(f));
  CHECK(f2.gens == f.gens);
  CHECK(f2.names == f.names);

  BettiTable b;
  b.steps = {{{2, 3}}, {{3, 6}}, {{4, 10}}};
  int start = 0;
  CHECK(betti_from_json(betti_to_json(b, 2), &start) == b);
  CHECK(start == 2);

  MultigradedBetti mb;
  mb.steps = {{{{1, 1, 0}, 1}}, {{{2, 1, 0}, 1}, {{1, 1, 1}, 2}}};
  CHECK(multigraded_betti_from_json(multigraded_betti_to_json(mb)).steps == mb.steps);
}

TEST_CASE("malformed input raises parse errors") {
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": 2})")), ParseError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"dim": 2, "hyperplanes": [{"normal": [0, 0]}]})")),
                  ParseError);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"p": 6})")), ParseError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n": 2, "facets": [[3]]})")), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}
