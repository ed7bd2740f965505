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

// Writes the fixture corpus as JSON files under the given directory.
#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>

#include "osres/fixtures.hpp"
#include "osres/io.hpp"

namespace fs = std::filesystem;
using namespace osres;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <dir>\n";
    return 2;
  }
  const fs::path root(argv[1]);
  for (const char* sub : {"arrangements", "ideals", "monomial_ideals", "complexes", "links"}) {
    fs::create_directories(root / sub);
  }
  const Field q = Field::rationals();
  for (const Arrangement& a : arrangement_corpus(q)) {
    write_json_file((root / "arrangements" / (lower(a.name()) + ".json")).string(),
                    arrangement_to_json(a));
  }

  write_json_file((root / "ideals" / "example_abcd.json").string(),
                  ideal_to_json({q, 4, {"a", "b", "c", "d"}, example_ideal_abcd(q)}));
  write_json_file((root / "ideals" / "genus2.json").string(),
                  ideal_to_json({q, 4, {"a1", "b1", "a2", "b2"}, surface_algebra_ideal(q, 2)}));

  write_json_file((root / "monomial_ideals" / "x1x2_x1x3.json").string(),
                  monomial_ideal_to_json({3, {0b011, 0b101}}));
  write_json_file((root / "monomial_ideals" / "two_edges.json").string(),
                  monomial_ideal_to_json({4, {0b0101, 0b0110, 0b1001, 0b1010}}));

  write_json_file((root / "complexes" / "path.json").string(),
                  complex_to_json(SimplicialComplex::from_faces(3, {0b011, 0b110})));
  write_json_file((root / "complexes" / "two_edges.json").string(),
                  complex_to_json(SimplicialComplex::from_faces(4, {0b0011, 0b1100})));
  write_json_file((root / "complexes" / "two_points.json").string(),
                  complex_to_json(SimplicialComplex::from_faces(2, {0b01, 0b10})));

  const auto mats = link_corpus();
  const auto names = link_corpus_names();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    write_json_file((root / "links" / (names[i] + ".json")).string(), Json{{"linking", mats[i]}});
  }
  return 0;
}
