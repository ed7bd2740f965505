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

#ifndef OSRES_IO_HPP_
#define OSRES_IO_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "osres/arrangement.hpp"
#include "osres/exterior.hpp"
#include "osres/local_systems.hpp"
#include "osres/resolution.hpp"
#include "osres/squarefree.hpp"

namespace osres {

using Json = nlohmann::ordered_json;

// All readers throw ParseError on malformed input. Index lists in files are
// 1-based; in memory they are masks over 0-based variables.

// {"field": "Q" | {"p": prime}, "dim": l,
//  "hyperplanes": [{"normal": [...], "const": c0}, ...], "name": optional}.
// Scalars are integers or strings "a/b".
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

Json field_to_json(Field k);
Field field_from_json(const Json& j);

// {"n": n, "facets": [[1, 2], [2, 3]]}.
Json complex_to_json(const SimplicialComplex& d);
SimplicialComplex complex_from_json(const Json& j);

// Square-free monomial ideal: {"n": n, "monomials": [[1, 2], [1, 3]]}.
struct MonomialIdealFile {
  int n = 0;
  std::vector<Mask> gens;
};
Json monomial_ideal_to_json(const MonomialIdealFile& m);
MonomialIdealFile monomial_ideal_from_json(const Json& j);

// Ideal of E: {"field": ..., "n": n, "names": optional, "generators": ["e1*e2 - e1*e3", ...]}.
struct IdealFile {
  Field field = Field::rationals();
  int n = 0;
  std::vector<std::string> names;
  std::vector<ExteriorElement> gens;
};
Json ideal_to_json(const IdealFile& f);
IdealFile ideal_from_json(const Json& j);

// {"start": s, "rows": [{"step": i, "degrees": {"d": rank}}]}.
Json betti_to_json(const BettiTable& b, int start);
BettiTable betti_from_json(const Json& j, int* start = nullptr);

// [{"step": i, "multidegree": [...], "rank": r}, ...].
Json multigraded_betti_to_json(const MultigradedBetti& b);
MultigradedBetti multigraded_betti_from_json(const Json& j);

// {"d": dim, ...} keyed by degree.
Json hilbert_to_json(const std::vector<std::int64_t>& dims, int first_degree);

Json aomoto_to_json(const AomotoReport& r);

// Whole file helpers.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace osres

#endif  // OSRES_IO_HPP_
