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

#include <algorithm>

#include "osres/acceptance.hpp"

using namespace osres;

TEST_CASE("suites cover the twelve criteria") {
  CHECK(criterion_slugs().size() == 12);
  CHECK(suite_members("all").size() == 12);
  std::vector<int> seen;
  for (const std::string& s : suite_names()) {
    if (s == "all") continue;
    for (int id : suite_members(s)) seen.push_back(id);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen.size() == 12);
  CHECK(suite_members(criterion_slugs()[7]) == std::vector<int>{8});
  CHECK_THROWS(suite_members("nonsense"));
}

TEST_CASE("a single criterion reports a result line") {
  AcceptanceConfig c;
  const CriterionResult r = run_criterion(8, c);
  CHECK(r.pass);
  CHECK(format_result(r).rfind("PASS 08", 0) == 0);
}
