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

#ifndef OSRES_ACCEPTANCE_HPP_
#define OSRES_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "osres/arrangement.hpp"
#include "osres/scalar.hpp"

namespace osres {

struct AcceptanceConfig {
  Field field = Field::rationals();
  std::uint64_t seed = 20260101;
  int samples = 100;
  // Directory with arrangement files; empty means the built-in corpus.
  std::string corpus_dir;
};

struct CriterionResult {
  int id = 0;
  std::string slug;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Slugs of the twelve criteria, in order.
const std::vector<std::string>& criterion_slugs();

// Suites: "all", a criterion slug, or one of the groups "resolution",
// "singular", "bgg", "groebner", "transfer", "duality", "links".
std::vector<int> suite_members(const std::string& suite);
std::vector<std::string> suite_names();

CriterionResult run_criterion(int id, const AcceptanceConfig& config);

// "PASS 01 resolution-linearity  detail".
std::string format_result(const CriterionResult& r);

// Arrangements from corpus_dir (every *.json, sorted by file name) or the
// built-in corpus.
std::vector<Arrangement> load_corpus(const AcceptanceConfig& config);

}  // namespace osres

#endif  // OSRES_ACCEPTANCE_HPP_
