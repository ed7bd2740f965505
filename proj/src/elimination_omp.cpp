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

#include <omp.h>

#include "elimination.hpp"

namespace osres::detail {

// Rows are processed in batches. Inside a batch every row is reduced against
// the basis as it stood before the batch, in parallel; the partial results
// are then finished serially in input order, which picks up pivots created
// earlier in the same batch.
template <class Eliminator>
void echelon_parallel(Eliminator& e, const std::vector<typename Eliminator::Row>& rows) {
  using Row = typename Eliminator::Row;
  const int threads = omp_in_parallel() ? 1 : omp_get_max_threads();
  if (threads <= 1 || rows.size() < 64) {
    echelon_serial(e, rows);
    return;
  }
  const std::size_t batch = static_cast<std::size_t>(threads) * 16;
  std::vector<Row> partial(batch);
  auto acc = e.make_acc();
  for (std::size_t begin = 0; begin < rows.size(); begin += batch) {
    const std::size_t end = std::min(rows.size(), begin + batch);
    const long count = static_cast<long>(end - begin);
#pragma omp parallel num_threads(threads)
    {
      auto local = e.make_acc();
#pragma omp for schedule(dynamic, 1)
      for (long k = 0; k < count; ++k) {
        const int lead = e.reduce(local, e.load(local, rows[begin + k]));
        partial[k] = lead >= 0 ? e.extract(local, lead, false) : Row{};
      }
    }
    for (long k = 0; k < count; ++k) {
      if (partial[k].empty()) continue;
      const int lead = e.reduce(acc, e.load(acc, partial[k]));
      if (lead >= 0) e.insert(e.extract(acc, lead, true));
      partial[k] = Row{};
    }
  }
}

template void echelon_parallel<FpEliminator>(FpEliminator&,
                                             const std::vector<FpEliminator::Row>&);
template void echelon_parallel<ZEliminator>(ZEliminator&,
                                            const std::vector<ZEliminator::Row>&);

}  // namespace osres::detail
