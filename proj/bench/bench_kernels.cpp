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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ifilt/corpus.hpp"
#include "ifilt/linalg/kernels.hpp"
#include "ifilt/saturation.hpp"

namespace {

using ifilt::FiniteField;

ifilt::ContextPtr<FiniteField> context(unsigned D) {
  return ifilt::TruncationContext<FiniteField>::make(std::make_shared<const FiniteField>(FiniteField::prime(3)), 3, D);
}

std::vector<ifilt::Echelon<FiniteField>::Vec> seeds(const ifilt::TruncationContext<FiniteField>& ctx) {
  ifilt::corpus::Rng rng(7);
  std::vector<ifilt::Echelon<FiniteField>::Vec> out;
  for (int i = 0; i < 3; ++i) out.push_back(ctx.to_vector_truncated(ifilt::corpus::random_poly(ctx, rng, 2, 4, 4)));
  return out;
}

void close(benchmark::State& state, ifilt::Kernel kernel) {
  const auto ctx = context(static_cast<unsigned>(state.range(0)));
  const auto s = seeds(*ctx);
  for (auto _ : state) {
    ifilt::Echelon<FiniteField> basis(&ctx->field(), ctx->ncols());
    ifilt::close_ideal(basis, *ctx, s, kernel);
    benchmark::DoNotOptimize(basis.rank());
  }
}

void BM_CloseIdealSerial(benchmark::State& state) { close(state, ifilt::Kernel::kSerial); }
void BM_CloseIdealParallel(benchmark::State& state) { close(state, ifilt::Kernel::kParallel); }
BENCHMARK(BM_CloseIdealSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CloseIdealParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void levels(benchmark::State& state, ifilt::Kernel kernel) {
  const auto ctx = context(static_cast<unsigned>(state.range(0)));
  ifilt::FiltrationSpec<FiniteField> F(ctx);
  F.add(ctx->var(0).pow(2) + ctx->var(1).pow(3) + ctx->var(2).pow(4), 3);
  const auto Fd = ifilt::d_saturate(F);
  for (auto _ : state) {
    const ifilt::LevelIdeals<FiniteField> L(Fd, kernel);
    benchmark::DoNotOptimize(L.at(ifilt::Rational(5, 2))->dim());
  }
}

void BM_LevelIdealsSerial(benchmark::State& state) { levels(state, ifilt::Kernel::kSerial); }
void BM_LevelIdealsParallel(benchmark::State& state) { levels(state, ifilt::Kernel::kParallel); }
BENCHMARK(BM_LevelIdealsSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LevelIdealsParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
