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

#include "osres/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "osres/linalg.hpp"

namespace osres {

namespace {

int rank_of(Field k, const std::vector<std::vector<Scalar>>& vectors, int width) {
  Matrix m(k, static_cast<int>(vectors.size()), width);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < width; ++c) m.add(r, c, vectors[r][c]);
  }
  return rank(m, Backend::kSerial);
}

bool proportional(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  // a and b are nonzero; compare a[i] b[j] == a[j] b[i] for all i, j.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
  }
  return true;
}

std::vector<int> natural_order(int n) {
  std::vector<int> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

Arrangement::Arrangement(Field field, int dim, std::vector<Hyperplane> hyperplanes,
                         std::string name)
    : field_(field), dim_(dim), h_(std::move(hyperplanes)), name_(std::move(name)) {
  if (dim < 1) throw PreconditionError("arrangement dimension must be positive");
  if (h_.empty()) throw PreconditionError("arrangement has no hyperplanes");
  if (static_cast<int>(h_.size()) > kMaxVariables) {
    throw PreconditionError("too many hyperplanes (limit " + std::to_string(kMaxVariables) + ")");
  }
  for (std::size_t i = 0; i < h_.size(); ++i) {
    auto& h = h_[i];
    if (static_cast<int>(h.normal.size()) != dim) {
      throw PreconditionError("hyperplane " + std::to_string(i + 1) + " has normal of length " +
                              std::to_string(h.normal.size()) + ", expected " +
                              std::to_string(dim));
    }
    for (auto& c : h.normal) c = field.convert(c);
    h.constant = field.convert(h.constant);
    bool zero = true;
    for (const auto& c : h.normal) zero = zero && c.is_zero();
    if (zero) throw PreconditionError("hyperplane " + std::to_string(i + 1) + " has zero normal");
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (proportional(functional(i), functional(j))) {
        throw PreconditionError("hyperplanes " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " coincide");
      }
    }
  }
}

std::vector<Scalar> Arrangement::functional(int i) const {
  std::vector<Scalar> f = h_[i].normal;
  f.push_back(h_[i].constant);
  return f;
}

int Arrangement::normal_rank(Mask subset) const {
  std::vector<std::vector<Scalar>> v;
  for (int i = 0; i < size(); ++i) {
    if (subset >> i & 1) v.push_back(h_[i].normal);
  }
  return rank_of(field_, v, dim_);
}

int Arrangement::functional_rank(Mask subset) const {
  std::vector<std::vector<Scalar>> v;
  for (int i = 0; i < size(); ++i) {
    if (subset >> i & 1) v.push_back(functional(i));
  }
  return rank_of(field_, v, dim_ + 1);
}

bool Arrangement::intersects(Mask subset) const {
  return normal_rank(subset) == functional_rank(subset);
}

CircuitData circuits(const Arrangement& a) {
  const int n = a.size();
  CircuitData out;
  std::vector<Mask> minimal_dependent;
  for (int k = 1; k <= n; ++k) {
    for (Mask s : masks_of_degree(n, k)) {
      auto contains_any = [s](const std::vector<Mask>& list) {
        for (Mask t : list) {
          if ((t & s) == t) return true;
        }
        return false;
      };
      const bool empty_here = !contains_any(out.empty_min_sets) && !a.intersects(s);
      if (empty_here) out.empty_min_sets.push_back(s);
      if (contains_any(minimal_dependent)) continue;
      if (a.functional_rank(s) < k) {
        minimal_dependent.push_back(s);
        // A minimal dependent set either meets or is already empty.
        if (a.intersects(s)) out.dependent_circuits.push_back(s);
      }
    }
  }
  return out;
}

std::vector<ExteriorElement> os_ideal(const Arrangement& a, Field k) {
  const CircuitData c = circuits(a);
  std::vector<ExteriorElement> gens;
  for (Mask s : c.dependent_circuits) gens.push_back(os_boundary(k, a.size(), s));
  for (Mask s : c.empty_min_sets) gens.push_back(ExteriorElement::monomial(k, a.size(), s));
  return gens;
}

std::vector<Mask> broken_circuits(const Arrangement& a, const std::vector<int>& order) {
  const std::vector<int> rank = order.empty() ? natural_order(a.size()) : order;
  if (static_cast<int>(rank.size()) != a.size()) {
    throw PreconditionError("order must rank every hyperplane");
  }
  std::vector<Mask> out;
  for (Mask c : circuits(a).dependent_circuits) {
    int least = -1;
    for (int i = 0; i < a.size(); ++i) {
      if ((c >> i & 1) && (least < 0 || rank[i] < rank[least])) least = i;
    }
    out.push_back(c & ~(Mask{1} << least));
  }
  return out;
}

NbcBasis nbc_basis(const Arrangement& a, const std::vector<int>& order) {
  const std::vector<Mask> bc = broken_circuits(a, order);
  const std::vector<Mask> empty = circuits(a).empty_min_sets;
  NbcBasis out;
  for (int d = 0; d <= a.size(); ++d) {
    std::vector<Mask> level;
    for (Mask m : masks_of_degree(a.size(), d)) {
      bool ok = true;
      for (Mask b : bc) ok = ok && (b & m) != b;
      for (Mask e : empty) ok = ok && (e & m) != e;
      if (ok) level.push_back(m);
    }
    if (level.empty()) break;
    out.dims.push_back(static_cast<std::int64_t>(level.size()));
    out.monomials.push_back(std::move(level));
  }
  return out;
}

int os_rank(const Arrangement& a) { return static_cast<int>(nbc_basis(a).dims.size()) - 1; }

IntPoly char_poly(const Arrangement& a) {
  if (a.is_central()) {
    return characteristic_from_poincare(nbc_basis(a).dims, a.dim());
  }
  const Arrangement c = cone(a);
  return characteristic_from_poincare(nbc_basis(c).dims, c.dim()).divide_by_linear(1);
}

Arrangement cone(const Arrangement& a) {
  const Field k = a.field();
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) {
    Hyperplane c;
    c.normal = h.normal;
    c.normal.push_back(h.constant);
    c.constant = k.zero();
    hs.push_back(std::move(c));
  }
  Hyperplane infinity;
  infinity.normal.assign(a.dim() + 1, k.zero());
  infinity.normal.back() = k.one();
  infinity.constant = k.zero();
  hs.push_back(std::move(infinity));
  return Arrangement(k, a.dim() + 1, std::move(hs),
                     a.name().empty() ? "" : "cone(" + a.name() + ")");
}

Arrangement decone(const Arrangement& a, int h) {
  if (!a.is_central()) throw PreconditionError("decone requires a central arrangement");
  if (h < 0 || h >= a.size()) throw PreconditionError("decone: hyperplane index out of range");
  if (a.size() < 2) throw PreconditionError("decone of a single hyperplane is empty");
  if (a.dim() < 2) throw PreconditionError("decone requires dimension at least 2");
  const Field k = a.field();
  const int l = a.dim();
  // After moving the common point to the origin every functional is its
  // normal. Restrict to the affine chart {alpha_h = 1}, solving for x_p.
  const std::vector<Scalar>& ch = a.hyperplanes()[h].normal;
  int p = 0;
  while (ch[p].is_zero()) ++p;
  std::vector<Hyperplane> out;
  for (int i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    const std::vector<Scalar>& ci = a.hyperplanes()[i].normal;
    const Scalar ratio = ci[p] / ch[p];
    Hyperplane d;
    for (int j = 0; j < l; ++j) {
      if (j != p) d.normal.push_back(ci[j] - ratio * ch[j]);
    }
    d.constant = ratio;
    out.push_back(std::move(d));
  }
  return Arrangement(k, l - 1, std::move(out),
                     a.name().empty() ? "" : "decone(" + a.name() + ")");
}

ProductDecomposition product_decompose(const Arrangement& a) {
  const int n = a.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join_mask = [&](Mask s) {
    const int first = __builtin_ctz(s);
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) parent[find(i)] = find(first);
    }
  };
  const CircuitData c = circuits(a);
  for (Mask s : c.dependent_circuits) join_mask(s);
  for (Mask s : c.empty_min_sets) join_mask(s);

  std::vector<Mask> blocks;
  for (int i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    Mask b = 0;
    for (int j = 0; j < n; ++j) {
      if (find(j) == i) b |= Mask{1} << j;
    }
    blocks.push_back(b);
  }
  // A product needs the normal spans of the blocks to form a direct sum.
  // Merge offending pairs until they do.
  auto additive = [&](const std::vector<Mask>& bs) {
    int sum = 0;
    for (Mask b : bs) sum += a.normal_rank(b);
    return sum == a.normal_rank(a.full_mask());
  };
  while (!additive(blocks)) {
    bool merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j) {
        if (a.normal_rank(blocks[i] | blocks[j]) <
            a.normal_rank(blocks[i]) + a.normal_rank(blocks[j])) {
          blocks[i] |= blocks[j];
          blocks.erase(blocks.begin() + j);
          merged = true;
        }
      }
    }
    if (!merged) blocks = {a.full_mask()};
  }
  std::sort(blocks.begin(), blocks.end(),
            [](Mask x, Mask y) { return __builtin_ctz(x) < __builtin_ctz(y); });
  ProductDecomposition out;
  for (Mask b : blocks) {
    out.factors.push_back(b);
    out.central.push_back(a.intersects(b));
  }
  return out;
}

std::vector<std::vector<Scalar>> singular_variety_equations(const Arrangement& a, Field k) {
  const ProductDecomposition d = product_decompose(a);
  std::vector<std::vector<Scalar>> eqs;
  for (std::size_t f = 0; f < d.factors.size(); ++f) {
    if (!d.central[f]) continue;
    std::vector<Scalar> e(a.size(), k.zero());
    for (int i = 0; i < a.size(); ++i) {
      if (d.factors[f] >> i & 1) e[i] = k.one();
    }
    eqs.push_back(std::move(e));
  }
  return eqs;
}

std::vector<ExteriorElement> surface_algebra_ideal(Field k, int genus) {
  if (genus < 1) throw PreconditionError("genus must be at least 1");
  const int n = 2 * genus;
  if (n > kMaxVariables) throw PreconditionError("genus too large");
  auto a = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  auto mono = [&](int x, int y) {
    return ExteriorElement::monomial(k, n, (Mask{1} << x) | (Mask{1} << y));
  };
  std::vector<ExteriorElement> gens;
  for (int i = 0; i < genus; ++i) {
    for (int j = i + 1; j < genus; ++j) gens.push_back(mono(a(i), a(j)));
  }
  for (int i = 0; i < genus; ++i) {
    for (int j = i + 1; j < genus; ++j) gens.push_back(mono(b(i), b(j)));
  }
  for (int i = 0; i < genus; ++i) {
    for (int j = 0; j < genus; ++j) {
      if (i != j) gens.push_back(mono(a(i), b(j)));
    }
  }
  for (int j = 1; j < genus; ++j) gens.push_back(mono(a(0), b(0)) - mono(a(j), b(j)));
  return gens;
}

std::vector<ExteriorElement> link_complement_ideal(Field k,
                                                   const std::vector<std::vector<long>>& linking) {
  if (!k.is_rational()) throw PreconditionError("link complement ideal needs characteristic 0");
  const int n = static_cast<int>(linking.size());
  if (n < 1 || n > kMaxVariables) throw PreconditionError("bad number of link components");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(linking[i].size()) != n) throw PreconditionError("linking matrix not square");
    if (linking[i][i] != 0) throw PreconditionError("linking matrix has nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      if (linking[i][j] != linking[j][i]) throw PreconditionError("linking matrix not symmetric");
    }
  }
  std::vector<int> parent(n, -2), depth(n, 0);
  std::queue<int> bfs;
  parent[0] = -1;
  bfs.push(0);
  while (!bfs.empty()) {
    const int u = bfs.front();
    bfs.pop();
    for (int v = 0; v < n; ++v) {
      if (linking[u][v] != 0 && parent[v] == -2) {
        parent[v] = u;
        depth[v] = depth[u] + 1;
        bfs.push(v);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (parent[v] == -2) throw PreconditionError("linking graph is disconnected");
  }
  auto edge_term = [&](int x, int y) {
    const Scalar c = k.one() / k.from_int(linking[x][y]);
    return ExteriorElement::monomial(k, n, Mask{1} << x) *
           ExteriorElement::monomial(k, n, Mask{1} << y) * c;
  };
  std::vector<ExteriorElement> gens;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (linking[i][j] == 0) {
        gens.push_back(ExteriorElement::monomial(k, n, (Mask{1} << i) | (Mask{1} << j)));
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (linking[u][v] == 0 || parent[v] == u || parent[u] == v) continue;
      // Cycle u -> v, then back to u along the tree.
      std::vector<int> up_v{v}, up_u{u};
      int x = v, y = u;
      while (depth[x] > depth[y]) up_v.push_back(x = parent[x]);
      while (depth[y] > depth[x]) up_u.push_back(y = parent[y]);
      while (x != y) {
        up_v.push_back(x = parent[x]);
        up_u.push_back(y = parent[y]);
      }
      std::vector<int> cycle{u};
      cycle.insert(cycle.end(), up_v.begin(), up_v.end());
      for (auto it = up_u.rbegin() + 1; it != up_u.rend(); ++it) cycle.push_back(*it);
      ExteriorElement r(k, n);
      for (std::size_t t = 0; t + 1 < cycle.size(); ++t) r = r + edge_term(cycle[t], cycle[t + 1]);
      gens.push_back(r);
    }
  }
  return gens;
}

}  // namespace osres
