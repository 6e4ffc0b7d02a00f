// Copyright 2026 The ifilt Authors
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

// Ideal-closure kernels: grow an echelon basis until its span is stable
// under multiplication by every variable in R/m^{D+1}. The serial version is
// the reference; the OpenMP version reduces whole batches of candidate rows
// concurrently against a frozen basis and commits them in order.

#ifndef IFILT_LINALG_KERNELS_HPP
#define IFILT_LINALG_KERNELS_HPP

#include <deque>
#include <vector>

#include "ifilt/context.hpp"
#include "ifilt/linalg/echelon.hpp"

namespace ifilt {

enum class Kernel { kSerial, kParallel };

template <FieldLike K>
void close_ideal_serial(Echelon<K>& basis, const TruncationContext<K>& ctx,
                        std::vector<typename Echelon<K>::Vec> seeds) {
  std::deque<typename Echelon<K>::Vec> queue(std::make_move_iterator(seeds.begin()), std::make_move_iterator(seeds.end()));
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    const auto r = basis.insert(std::move(v));
    if (!r) continue;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) queue.push_back(ctx.shift(basis.rows()[*r], i));
  }
}

template <FieldLike K>
void close_ideal_parallel(Echelon<K>& basis, const TruncationContext<K>& ctx,
                          std::vector<typename Echelon<K>::Vec> seeds) {
  using Vec = typename Echelon<K>::Vec;
  const std::size_t n = ctx.nvars();
  std::vector<Vec> pending = std::move(seeds);
  std::vector<char> vanished;
  while (!pending.empty()) {
    const auto count = static_cast<std::int64_t>(pending.size());
    vanished.assign(pending.size(), 0);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < count; ++k) vanished[k] = basis.reduce(pending[k]) ? 1 : 0;

    std::vector<std::size_t> fresh;
    for (std::size_t k = 0; k < pending.size(); ++k) {
      if (vanished[k]) continue;
      if (const auto r = basis.insert(std::move(pending[k]))) fresh.push_back(*r);
    }

    std::vector<Vec> next(fresh.size() * n);
    const auto total = static_cast<std::int64_t>(next.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < total; ++j)
      next[j] = ctx.shift(basis.rows()[fresh[static_cast<std::size_t>(j) / n]], static_cast<std::size_t>(j) % n);
    pending = std::move(next);
  }
}

template <FieldLike K>
void close_ideal(Echelon<K>& basis, const TruncationContext<K>& ctx, std::vector<typename Echelon<K>::Vec> seeds,
                 Kernel kernel) {
  if (kernel == Kernel::kSerial)
    close_ideal_serial(basis, ctx, std::move(seeds));
  else
    close_ideal_parallel(basis, ctx, std::move(seeds));
}

/// Membership of many vectors at once; entry k is true iff vs[k] is in the span.
template <FieldLike K>
std::vector<bool> contains_all(const Echelon<K>& basis, std::vector<typename Echelon<K>::Vec> vs) {
  std::vector<char> in(vs.size(), 0);
  const auto count = static_cast<std::int64_t>(vs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < count; ++k) in[k] = basis.reduce(vs[k]) ? 1 : 0;
  return std::vector<bool>(in.begin(), in.end());
}

}  // namespace ifilt

#endif  // IFILT_LINALG_KERNELS_HPP
