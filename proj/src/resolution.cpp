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

#include "osres/resolution.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "osres/monomials.hpp"
#include "osres/series.hpp"

namespace osres {

std::int64_t BettiTable::at(int i, int d) const {
  if (i < 0 || i >= length()) return 0;
  auto it = steps[i].find(d);
  return it == steps[i].end() ? 0 : it->second;
}

std::int64_t BettiTable::total(int i) const {
  std::int64_t t = 0;
  if (i < 0 || i >= length()) return 0;
  for (const auto& [d, b] : steps[i]) t += b;
  return t;
}

std::string BettiTable::to_string() const {
  int lo = 0, hi = -1;
  bool any = false;
  for (int i = 0; i < length(); ++i) {
    for (const auto& [d, b] : steps[i]) {
      if (!any || d - i < lo) lo = d - i;
      if (!any || d - i > hi) hi = d - i;
      any = true;
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i < length(); ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(total(i)));
  }
  cells.push_back(header);
  cells.push_back(totals);
  for (int r = lo; any && r <= hi; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i < length(); ++i) {
      const std::int64_t b = at(i, r + i);
      row.push_back(b == 0 ? "." : std::to_string(b));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(length() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::string(width[c] - row[c].size() + (c ? 1 : 0), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

BettiTable MultigradedBetti::coarsen() const {
  BettiTable b;
  b.steps.resize(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (const auto& [a, r] : steps[i]) {
      int d = 0;
      for (int x : a) d += x;
      b.steps[i][d] += r;
    }
  }
  return b;
}

std::optional<int> first_nonlinear_step(const BettiTable& b, int start) {
  for (int i = 0; i < b.length(); ++i) {
    for (const auto& [d, r] : b.steps[i]) {
      if (r != 0 && d != start + i) return i;
    }
  }
  return std::nullopt;
}

bool is_linear(const BettiTable& b, int start) { return !first_nonlinear_step(b, start); }

namespace {

// Differential of M (x) D in step i and internal degree d, as the rows of
// the images of the basis m_b (x) x^(c) indexed b * |D_i| + c.
Matrix cartan_differential(const GradedModule& m, const MonomialLevels& levels, int i, int d) {
  const int src = levels.size(i);
  const int dst = levels.size(i - 1);
  const int md = d - i;
  Matrix out(m.field(), m.dim(md) * src, m.dim(md + 1) * dst);
  for (int b = 0; b < m.dim(md); ++b) {
    for (int c = 0; c < src; ++c) {
      SparseVec row;
      for (int j = 0; j < m.num_vars(); ++j) {
        const int low = levels.lower(i, c, j);
        if (low < 0) continue;
        for (const auto& [b2, v] : m.act(j, md, b)) row.emplace_back(b2 * dst + low, v);
      }
      out.set_row(b * src + c, std::move(row));
    }
  }
  return out;
}

}  // namespace

BettiTable betti_table(const GradedModule& m, int steps, Backend backend) {
  if (steps < 0) throw PreconditionError("steps must be nonnegative");
  BettiTable table;
  table.steps.resize(steps + 1);
  if (m.is_zero()) return table;
  const MonomialLevels levels(m.num_vars(), steps + 1);
  auto cdim = [&](int i, int d) {
    return static_cast<std::int64_t>(m.dim(d - i)) * levels.size(i);
  };
  // Ranks of the differential leaving step i in degree d, for 1 <= i <= steps+1.
  std::vector<std::pair<int, int>> tasks;
  for (int i = 1; i <= steps + 1; ++i) {
    for (int d = m.min_degree() + i; d <= m.max_degree() + i; ++d) {
      if (cdim(i, d) > 0 && cdim(i - 1, d) > 0) tasks.emplace_back(i, d);
    }
  }
  std::vector<std::int64_t> ranks(tasks.size(), 0);
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (backend == Backend::kParallel)
  for (long t = 0; t < count; ++t) {
    const auto [i, d] = tasks[t];
    ranks[t] = rank(cartan_differential(m, levels, i, d), backend);
  }
  std::map<std::pair<int, int>, std::int64_t> rank_of;
  for (std::size_t t = 0; t < tasks.size(); ++t) rank_of[tasks[t]] = ranks[t];
  auto r = [&](int i, int d) {
    auto it = rank_of.find({i, d});
    return it == rank_of.end() ? std::int64_t{0} : it->second;
  };
  for (int i = 0; i <= steps; ++i) {
    for (int d = m.min_degree() + i; d <= m.max_degree() + i; ++d) {
      const std::int64_t b = cdim(i, d) - r(i, d) - r(i + 1, d);
      if (b != 0) table.steps[i][d] = b;
    }
  }
  return table;
}

MultigradedBetti multigraded_betti(const GradedModule& m, int steps, Backend backend) {
  if (!m.has_multidegrees() && !m.is_zero()) {
    throw PreconditionError("module carries no multidegrees");
  }
  MultigradedBetti out;
  out.steps.resize(steps + 1);
  if (m.is_zero()) return out;
  const int n = m.num_vars();
  const MonomialLevels levels(n, steps + 1);
  // Offsets of degree blocks in the flat index (degree, b, c) of each step.
  struct Cell {
    int d;  // degree of the module element
    int b;
    int c;
  };
  std::vector<std::map<MultiDegree, std::vector<Cell>>> groups(steps + 2);
  std::vector<std::map<std::tuple<int, int, int>, int>> local(steps + 2);
  for (int i = 0; i <= steps + 1; ++i) {
    for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
      for (int b = 0; b < m.dim(d); ++b) {
        for (int c = 0; c < levels.size(i); ++c) {
          MultiDegree a = m.multidegree(d, b);
          for (int j = 0; j < n; ++j) a[j] += levels.exponents(i, c)[j];
          auto& g = groups[i][a];
          local[i][{d, b, c}] = static_cast<int>(g.size());
          g.push_back({d, b, c});
        }
      }
    }
  }
  // rank of the differential leaving step i in multidegree a.
  std::vector<std::pair<int, const MultiDegree*>> tasks;
  for (int i = 1; i <= steps + 1; ++i) {
    for (const auto& [a, cells] : groups[i]) {
      if (groups[i - 1].count(a)) tasks.emplace_back(i, &a);
    }
  }
  std::vector<std::int64_t> ranks(tasks.size(), 0);
  const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) if (backend == Backend::kParallel)
  for (long t = 0; t < count; ++t) {
    const int i = tasks[t].first;
    const MultiDegree& a = *tasks[t].second;
    const auto& src = groups[i].at(a);
    const auto& dst = groups[i - 1].at(a);
    Matrix mat(m.field(), static_cast<int>(src.size()), static_cast<int>(dst.size()));
    for (int s = 0; s < static_cast<int>(src.size()); ++s) {
      const Cell& cell = src[s];
      SparseVec row;
      for (int j = 0; j < n; ++j) {
        const int low = levels.lower(i, cell.c, j);
        if (low < 0) continue;
        for (const auto& [b2, v] : m.act(j, cell.d, cell.b)) {
          row.emplace_back(local[i - 1].at({cell.d + 1, b2, low}), v);
        }
      }
      mat.set_row(s, std::move(row));
    }
    ranks[t] = rank(mat, backend);
  }
  std::map<std::pair<int, MultiDegree>, std::int64_t> rank_of;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    rank_of[{tasks[t].first, *tasks[t].second}] = ranks[t];
  }
  auto r = [&](int i, const MultiDegree& a) {
    auto it = rank_of.find({i, a});
    return it == rank_of.end() ? std::int64_t{0} : it->second;
  };
  for (int i = 0; i <= steps; ++i) {
    for (const auto& [a, cells] : groups[i]) {
      const std::int64_t b = static_cast<std::int64_t>(cells.size()) - r(i, a) - r(i + 1, a);
      if (b != 0) out.steps[i][a] = b;
    }
  }
  return out;
}

SyzygyStep first_syzygy(const GradedModule& m) {
  const Field k = m.field();
  const int n = m.num_vars();
  SyzygyStep out{{}, {}, GradedModule(k, n, 0, {0})};
  const std::vector<std::vector<int>> idx = minimal_generator_indices(m);
  for (std::size_t t = 0; t < idx.size(); ++t) {
    for (int c : idx[t]) {
      out.generator_degrees.push_back(m.min_degree() + static_cast<int>(t));
      out.generators.push_back({{c, k.one()}});
    }
  }
  const int g_count = static_cast<int>(out.generators.size());
  if (g_count == 0) return out;
  const int lo = out.generator_degrees.front();
  const int hi = out.generator_degrees.back() + n;
  // offset[d - lo][g]: start of generator g's block in F_d, or -1.
  std::vector<std::vector<int>> offset(hi - lo + 2, std::vector<int>(g_count, -1));
  std::vector<int> fdim(hi - lo + 2, 0);
  for (int d = lo; d <= hi; ++d) {
    for (int g = 0; g < g_count; ++g) {
      const int u = d - out.generator_degrees[g];
      if (u < 0 || u > n) continue;
      offset[d - lo][g] = fdim[d - lo];
      fdim[d - lo] += static_cast<int>(binomial(n, u));
    }
  }
  std::vector<Echelon> pieces;
  for (int d = lo; d <= hi; ++d) {
    std::vector<SparseVec> images;
    for (int g = 0; g < g_count; ++g) {
      const int u = d - out.generator_degrees[g];
      if (u < 0 || u > n) continue;
      for (Mask mask : masks_of_degree(n, u)) {
        images.push_back(m.apply_monomial(mask, out.generator_degrees[g], out.generators[g]));
      }
    }
    const std::vector<SparseVec> ker = map_kernel(k, images, m.dim(d));
    Matrix km(k, static_cast<int>(ker.size()), fdim[d - lo]);
    for (int r = 0; r < km.rows(); ++r) km.set_row(r, ker[r]);
    pieces.push_back(echelon(km, true));
  }
  // Label each column of F_d by its (generator, monomial).
  auto column_label = [&](int d, int col) {
    int g = g_count - 1;
    while (offset[d - lo][g] < 0 || offset[d - lo][g] > col) --g;
    const std::vector<Mask> masks = masks_of_degree(n, d - out.generator_degrees[g]);
    return std::make_pair(g, masks[col - offset[d - lo][g]]);
  };
  int first = 0;
  while (first < static_cast<int>(pieces.size()) && pieces[first].rank() == 0) ++first;
  if (first == static_cast<int>(pieces.size())) return out;
  int last = static_cast<int>(pieces.size()) - 1;
  while (pieces[last].rank() == 0) --last;
  std::vector<int> dims;
  for (int t = first; t <= last; ++t) dims.push_back(pieces[t].rank());
  GradedModule kernel(k, n, lo + first, dims);
  for (int t = first; t <= last; ++t) {
    const int d = lo + t;
    for (int j = 0; j < pieces[t].rank(); ++j) {
      for (int var = 0; var < n; ++var) {
        SparseVec image;
        for (const auto& [col, v] : pieces[t].rows[j]) {
          const auto [g, u] = column_label(d, col);
          const int s = product_sign(Mask{1} << var, u);
          if (s == 0) continue;
          const Mask w = u | (Mask{1} << var);
          image.emplace_back(offset[d + 1 - lo][g] + subset_rank(w), s > 0 ? v : -v);
        }
        canonicalize(image);
        if (image.empty()) continue;
        kernel.set_action(var, d, j, pivot_coordinates(pieces[t + 1], image));
      }
    }
  }
  out.kernel = std::move(kernel);
  return out;
}

BettiTable betti_table_iterated(const GradedModule& m, int steps) {
  BettiTable table;
  table.steps.resize(steps + 1);
  GradedModule cur = m;
  for (int i = 0; i <= steps && !cur.is_zero(); ++i) {
    if (i == steps) {
      const auto idx = minimal_generator_indices(cur);
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (!idx[t].empty()) table.steps[i][cur.min_degree() + static_cast<int>(t)] = idx[t].size();
      }
      break;
    }
    SyzygyStep s = first_syzygy(cur);
    for (int d : s.generator_degrees) ++table.steps[i][d];
    cur = std::move(s.kernel);
  }
  return table;
}

HomologyModule homology_module(const Arrangement& a, Field k) {
  const int n = a.size();
  return {annihilator_module(k, n, os_ideal(a, k)), n - os_rank(a)};
}

std::vector<std::int64_t> predicted_betti_series(const Arrangement& a, int trunc) {
  const int r = os_rank(a);
  IntPoly chi = characteristic_from_poincare(nbc_basis(a).dims, r);
  if (r % 2 == 1) chi = IntPoly({0}) - chi;
  return divide_by_one_minus_t_power(chi, a.size(), trunc);
}

std::vector<std::int64_t> socle_dims(const GradedModule& m) {
  std::vector<std::int64_t> out;
  for (int d = m.min_degree(); d <= m.max_degree(); ++d) {
    const int next = m.dim(d + 1);
    const int n = m.num_vars();
    std::vector<SparseVec> images;
    for (int j = 0; j < m.dim(d); ++j) {
      SparseVec v;
      for (int i = 0; i < n; ++i) {
        for (const auto& [c, x] : m.act(i, d, j)) v.emplace_back(i * next + c, x);
      }
      images.push_back(std::move(v));
    }
    out.push_back(static_cast<std::int64_t>(map_kernel(m.field(), images, n * next).size()));
  }
  return out;
}

bool os_ideal_resolution_is_linear(const Arrangement& a, Field k, int steps, BettiTable* table) {
  const std::vector<ExteriorElement> gens = os_ideal(a, k);
  const GradedModule i = ideal_module(k, a.size(), gens);
  const BettiTable b = betti_table(i, steps);
  if (table) *table = b;
  if (i.is_zero()) return true;
  return is_linear(b, i.min_degree());
}

}  // namespace osres
