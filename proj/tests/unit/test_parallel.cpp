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
#include <omp.h>

#include <random>

#include "osres/bgg.hpp"
#include "osres/fixtures.hpp"
#include "osres/linalg.hpp"
#include "osres/resolution.hpp"

using namespace osres;

namespace {

Matrix random_matrix(Field k, int rows, int cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> val(-5, 5);
  Matrix m(k, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (coin(rng) < density) m.add(r, c, k.from_int(val(rng)));
    }
  }
  return m;
}

struct Threads {
  explicit Threads(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("serial and parallel elimination agree") {
  Threads t(4);
  for (Field k : {Field::rationals(), Field::prime(32003), Field::prime(2)}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const Matrix m = random_matrix(k, 60, 50, 0.1 * seed, seed);
      const Echelon s = echelon(m, true, Backend::kSerial);
      const Echelon p = echelon(m, true, Backend::kParallel);
      CHECK(s.pivots == p.pivots);
      CHECK(s.rows == p.rows);
      CHECK(rank(m, Backend::kSerial) == rank(m, Backend::kParallel));
      CHECK(kernel(m, Backend::kSerial) == kernel(m, Backend::kParallel));
    }
  }
}

TEST_CASE("serial and parallel Betti tables agree") {
  Threads t(4);
  const Field k = Field::prime(32003);
  for (const Arrangement& a : {braid_arrangement(k, 4), generic_lines(k, 6), cone(central_lines(k, 5))}) {
    CAPTURE(a.name());
    const HomologyModule h = homology_module(a, k);
    CHECK(betti_table(h.module, 3, Backend::kSerial) == betti_table(h.module, 3, Backend::kParallel));
    const GradedModule alg = quotient_module(k, a.size(), os_ideal(a, k));
    CHECK(f_module_hilbert(alg, 3, Backend::kSerial) == f_module_hilbert(alg, 3, Backend::kParallel));
  }
}

TEST_CASE("linear algebra basics") {
  const Field k = Field::rationals();
  Matrix m(k, 2, 3);
  m.add(0, 0, k.one());
  m.add(0, 1, k.from_int(2));
  m.add(1, 0, k.from_int(2));
  m.add(1, 1, k.from_int(4));
  CHECK(rank(m) == 1);
  const auto ker = kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    for (int r = 0; r < m.rows(); ++r) {
      Scalar s = k.zero();
      for (const auto& [c, x] : v) s = s + m.at(r, c) * x;
      CHECK(s.is_zero());
    }
  }
  Subspace sub(k, 3);
  CHECK(sub.add({{0, k.one()}}));
  CHECK_FALSE(sub.add({{0, k.from_int(5)}}));
  CHECK(sub.dim() == 1);
}
