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

// Runs the twelve acceptance criteria and prints one line per criterion.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "osres/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string field = "Q";
  std::string suite = "all";
  osres::AcceptanceConfig config;
  app.add_option("--field", field, "Q or Fp:<p>");
  app.add_option("--seed", config.seed, "sampling seed");
  app.add_option("--samples", config.samples, "samples per fixture")->check(CLI::PositiveNumber);
  app.add_option("--corpus", config.corpus_dir, "directory of arrangement files");
  app.add_option("--suite", suite, "suite or criterion slug");
  CLI11_PARSE(app, argc, argv);
  try {
    config.field = osres::Field::parse(field);
    bool all = true;
    for (int id : osres::suite_members(suite)) {
      const osres::CriterionResult r = osres::run_criterion(id, config);
      std::cout << osres::format_result(r) << std::endl;
      std::fprintf(stderr, "criterion %02d: %.2f s\n", id, r.seconds);
      all = all && r.pass;
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
