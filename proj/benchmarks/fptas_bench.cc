// Copyright 2026 The kip Authors
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

#include <benchmark/benchmark.h>

#include "cli/generator.h"
#include "kip/dual.h"
#include "kip/fptas.h"
#include "kip/instance.h"

namespace {

kip::Instance Generated(std::size_t n, std::size_t t) {
  kip::cli::GeneratorParams params;
  params.n = n;
  params.t = t;
  params.seed = 11;
  return kip::Preprocess(kip::cli::GenerateInstance(params)).instance;
}

void BM_ApproxOptF(benchmark::State& state) {
  const kip::Instance inst = Generated(static_cast<std::size_t>(state.range(0)), 1);
  const kip::Rat eps(1, state.range(1));
  std::uint64_t states = 0;
  for (auto _ : state) {
    const kip::Solution s = kip::ApproxOptF(inst, eps);
    states = s.stats.dp_states;
    benchmark::DoNotOptimize(s.f_value);
  }
  state.counters["dp_states"] = static_cast<double>(states);
}
BENCHMARK(BM_ApproxOptF)
    ->ArgsProduct({{8, 16, 32, 64}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_ApproxOptFTwoDim(benchmark::State& state) {
  const kip::Instance inst = Generated(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kip::ApproxOptF(inst, kip::Rat(1)).f_value);
  }
}
BENCHMARK(BM_ApproxOptFTwoDim)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_OptFExact(benchmark::State& state) {
  const kip::Instance inst = Generated(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kip::OptFExact(inst).value);
  }
}
BENCHMARK(BM_OptFExact)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
