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

#include "osres/io.hpp"

#include <fstream>

namespace osres {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Scalar scalar_from_json(Field k, const Json& j) {
  try {
    if (j.is_number_integer()) return k.from_int(j.get<long>());
    if (j.is_string()) return k.parse_scalar(j.get<std::string>());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be an integer or a string \"a/b\"");
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) {
    const mpq_class& q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return s.to_string();
  }
  return s.residue().value;
}

Json mask_to_json(Mask m) {
  Json out = Json::array();
  for (int i = 0; i < kMaxVariables; ++i) {
    if (m >> i & 1) out.push_back(i + 1);
  }
  return out;
}

Mask mask_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("index set must be a list");
  Mask m = 0;
  for (const Json& x : j) {
    const int i = to_int(x, "index");
    if (i < 1 || i > n) throw ParseError("index " + std::to_string(i) + " out of range");
    m |= Mask{1} << (i - 1);
  }
  return m;
}

}  // namespace

Json field_to_json(Field k) {
  if (k.is_rational()) return "Q";
  return Json{{"p", k.characteristic()}};
}

Field field_from_json(const Json& j) {
  try {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    if (j.is_object()) {
      const Json& p = member(j, "p");
      if (!p.is_number_unsigned()) throw ParseError("prime must be a positive integer");
      return Field::prime(p.get<std::uint64_t>());
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("field must be \"Q\" or {\"p\": prime}");
}

Json arrangement_to_json(const Arrangement& a) {
  Json out;
  if (!a.name().empty()) out["name"] = a.name();
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  Json hs = Json::array();
  for (const Hyperplane& h : a.hyperplanes()) {
    Json normal = Json::array();
    for (const Scalar& c : h.normal) normal.push_back(scalar_to_json(c));
    hs.push_back(Json{{"normal", normal}, {"const", scalar_to_json(h.constant)}});
  }
  out["hyperplanes"] = hs;
  return out;
}

Arrangement arrangement_from_json(const Json& j) {
  const Field k = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  const int dim = to_int(member(j, "dim"), "dim");
  const Json& hs = member(j, "hyperplanes");
  if (!hs.is_array()) throw ParseError("hyperplanes must be a list");
  std::vector<Hyperplane> h;
  for (const Json& x : hs) {
    const Json& normal = member(x, "normal");
    if (!normal.is_array()) throw ParseError("normal must be a list");
    Hyperplane p;
    for (const Json& c : normal) p.normal.push_back(scalar_from_json(k, c));
    p.constant = x.contains("const") ? scalar_from_json(k, x.at("const")) : k.zero();
    h.push_back(std::move(p));
  }
  std::string name;
  if (j.contains("name") && j.at("name").is_string()) name = j.at("name").get<std::string>();
  try {
    return Arrangement(k, dim, std::move(h), name);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid arrangement: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& d) {
  Json facets = Json::array();
  for (Mask f : d.facets()) facets.push_back(mask_to_json(f));
  return Json{{"n", d.ground_size()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const int n = to_int(member(j, "n"), "n");
  if (n < 0 || n > kMaxVariables) throw ParseError("n out of range");
  const Json& facets = member(j, "facets");
  if (!facets.is_array()) throw ParseError("facets must be a list");
  if (facets.empty()) return SimplicialComplex::void_complex(n);
  std::vector<Mask> faces;
  for (const Json& f : facets) faces.push_back(mask_from_json(f, n));
  return SimplicialComplex::from_faces(n, faces);
}

Json monomial_ideal_to_json(const MonomialIdealFile& m) {
  Json gens = Json::array();
  for (Mask g : m.gens) gens.push_back(mask_to_json(g));
  return Json{{"n", m.n}, {"monomials", gens}};
}

MonomialIdealFile monomial_ideal_from_json(const Json& j) {
  MonomialIdealFile out;
  out.n = to_int(member(j, "n"), "n");
  if (out.n < 0 || out.n > kMaxVariables) throw ParseError("n out of range");
  const Json& gens = member(j, "monomials");
  if (!gens.is_array()) throw ParseError("monomials must be a list");
  for (const Json& g : gens) out.gens.push_back(mask_from_json(g, out.n));
  return out;
}

Json ideal_to_json(const IdealFile& f) {
  Json out;
  out["field"] = field_to_json(f.field);
  out["n"] = f.n;
  if (!f.names.empty()) out["names"] = f.names;
  Json gens = Json::array();
  for (const auto& g : f.gens) gens.push_back(g.to_string(f.names));
  out["generators"] = gens;
  return out;
}

IdealFile ideal_from_json(const Json& j) {
  IdealFile out;
  out.field = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  out.n = to_int(member(j, "n"), "n");
  if (out.n < 0 || out.n > kMaxVariables) throw ParseError("n out of range");
  if (j.contains("names")) {
    out.names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(out.names.size()) != out.n) throw ParseError("names has the wrong length");
  }
  const std::vector<std::string> names = out.names.empty() ? default_variable_names(out.n) : out.names;
  const Json& gens = member(j, "generators");
  if (!gens.is_array()) throw ParseError("generators must be a list");
  for (const Json& g : gens) {
    if (!g.is_string()) throw ParseError("generator must be a string");
    out.gens.push_back(parse_exterior(out.field, names, g.get<std::string>()));
  }
  return out;
}

Json betti_to_json(const BettiTable& b, int start) {
  Json rows = Json::array();
  for (int i = 0; i < b.length(); ++i) {
    Json degrees = Json::object();
    for (const auto& [d, r] : b.steps[i]) degrees[std::to_string(d)] = r;
    rows.push_back(Json{{"step", i}, {"degrees", degrees}});
  }
  return Json{{"start", start}, {"rows", rows}};
}

BettiTable betti_from_json(const Json& j, int* start) {
  if (start != nullptr) *start = to_int(member(j, "start"), "start");
  BettiTable b;
  for (const Json& row : member(j, "rows")) {
    const int i = to_int(member(row, "step"), "step");
    if (i < 0) throw ParseError("negative step");
    if (static_cast<int>(b.steps.size()) <= i) b.steps.resize(i + 1);
    for (const auto& [d, r] : member(row, "degrees").items()) {
      try {
        b.steps[i][std::stoi(d)] = r.get<std::int64_t>();
      } catch (const std::exception&) {
        throw ParseError("bad Betti entry");
      }
    }
  }
  return b;
}

Json multigraded_betti_to_json(const MultigradedBetti& b) {
  Json out = Json::array();
  for (int i = 0; i < static_cast<int>(b.steps.size()); ++i) {
    for (const auto& [a, r] : b.steps[i]) {
      out.push_back(Json{{"step", i}, {"multidegree", a}, {"rank", r}});
    }
  }
  return out;
}

MultigradedBetti multigraded_betti_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("multigraded table must be a list");
  MultigradedBetti b;
  for (const Json& e : j) {
    const int i = to_int(member(e, "step"), "step");
    if (i < 0) throw ParseError("negative step");
    if (static_cast<int>(b.steps.size()) <= i) b.steps.resize(i + 1);
    b.steps[i][member(e, "multidegree").get<MultiDegree>()] = member(e, "rank").get<std::int64_t>();
  }
  return b;
}

Json hilbert_to_json(const std::vector<std::int64_t>& dims, int first_degree) {
  Json out = Json::object();
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out[std::to_string(first_degree + static_cast<int>(i))] = dims[i];
  }
  return out;
}

Json aomoto_to_json(const AomotoReport& r) {
  Json e = Json::array();
  for (const Scalar& c : r.e) e.push_back(scalar_to_json(c));
  return Json{{"e", e}, {"dims", r.dims}, {"zero", r.is_zero()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace osres
