// Copyright 2026 The AIMQ Authors. All rights reserved.
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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "aimq/engine.hpp"
#include "aimq/filter.hpp"
#include "aimq/ladder.hpp"
#include "aimq/signal.hpp"

namespace {

void BM_SelectLevel(benchmark::State& state) {
  const auto ladder = aimq::default_ladder();
  std::mt19937_64 rng{1};
  std::uniform_real_distribution<double> volts(0.0, 160.0);
  std::vector<double> inputs(4096);
  for (auto& v : inputs) v = volts(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(aimq::select_level(inputs[i++ & 4095], ladder));
  }
}
BENCHMARK(BM_SelectLevel);

void BM_FilterStep(benchmark::State& state) {
  auto f = aimq::design_sallen_key({16.0, 1.1, 0.5, 1e-4});
  double x = 1.0;
  for (auto _ : state) {
    x = -x;
    benchmark::DoNotOptimize(aimq::filter_step(f, x));
  }
}
BENCHMARK(BM_FilterStep);

void BM_Simulate(benchmark::State& state) {
  const auto config = aimq::default_sim_config();
  const auto bus = aimq::random_walk_bus(
      100.0, static_cast<int>(state.range(0)), 0.01, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aimq::simulate(config, bus));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 100);
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
