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

#ifndef OSRES_RESOLUTION_HPP_
#define OSRES_RESOLUTION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osres/arrangement.hpp"
#include "osres/linalg.hpp"
#include "osres/module.hpp"

namespace osres {

// Graded Betti numbers: steps[i][d] = beta_{i,d}, zero entries omitted.
struct BettiTable {
  std::vector<std::map<int, std::int64_t>> steps;

  std::int64_t at(int i, int d) const;
  std::int64_t total(int i) const;
  int length() const { return static_cast<int>(steps.size()); }
  // Rows indexed by d - i, columns by i.
  std::string to_string() const;
  bool operator==(const BettiTable& o) const { return steps == o.steps; }
};

struct MultigradedBetti {
  std::vector<std::map<MultiDegree, std::int64_t>> steps;
  BettiTable coarsen() const;
};

// True when beta_{i,d} = 0 for all d != start + i over the computed steps.
bool is_linear(const BettiTable& b, int start);
// First step that carries a degree other than start + i, if any.
std::optional<int> first_nonlinear_step(const BettiTable& b, int start);

// Betti numbers of M through homological step `steps`, computed as the
// homology of M tensored with the Cartan resolution of K: in internal
// degree d, step i is M_(d-i) x D_i with D_i spanned by divided monomials
// x^(c), |c| = i, and differential m x^(c) -> sum_j e_j m x^(c - eps_j).
BettiTable betti_table(const GradedModule& m, int steps,
                       Backend backend = default_backend());
// Same with the finer grading; requires multidegrees on M.
MultigradedBetti multigraded_betti(const GradedModule& m, int steps,
                                   Backend backend = default_backend());

// One step of an explicit minimal free resolution: minimal generators of M,
// the free module F on them and the kernel of F -> M.
struct SyzygyStep {
  std::vector<int> generator_degrees;
  // Generator g as a vector of M in degree generator_degrees[g].
  std::vector<SparseVec> generators;
  GradedModule kernel;
};

SyzygyStep first_syzygy(const GradedModule& m);
// Betti numbers by iterating first_syzygy. Only practical for small modules.
BettiTable betti_table_iterated(const GradedModule& m, int steps);

// H_*(X) of the complement as the annihilator J = (0 : I) in E, graded so
// that it is generated in degree n - rank. Resolving J this way is the same
// as resolving H_*(X) generated in degree -rank, up to the twist by n.
struct HomologyModule {
  GradedModule module;
  int start;  // n - rank
};
HomologyModule homology_module(const Arrangement& a, Field k);

// Coefficients of t^0..t^trunc in (-1)^r chi(A, t) / (1 - t)^n, where r is
// the rank and chi is taken for the essentialization.
std::vector<std::int64_t> predicted_betti_series(const Arrangement& a, int trunc);

// Dimensions of {x in M_d : e_i x = 0 for all i}, by degree from
// M.min_degree().
std::vector<std::int64_t> socle_dims(const GradedModule& m);

// Resolves the Orlik-Solomon ideal I itself and tests linearity from its
// generator degree. An arrangement with I = 0 counts as linear.
bool os_ideal_resolution_is_linear(const Arrangement& a, Field k, int steps,
                                   BettiTable* table = nullptr);

}  // namespace osres

#endif  // OSRES_RESOLUTION_HPP_
