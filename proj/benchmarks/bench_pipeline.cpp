// Copyright 2026 The linforest Authors
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

#include "linforest/decomposition.hpp"
#include "linforest/edge_coloring.hpp"
#include "linforest/generators.hpp"
#include "linforest/optimizer.hpp"

namespace linforest {
namespace {

void BM_Vizing(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), static_cast<int>(state.range(1)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(vizing_color(g).num_colors);
}
BENCHMARK(BM_Vizing)->Args({500, 10})->Args({500, 50})->Unit(benchmark::kMillisecond);

void BM_SampleMinForest(benchmark::State& state) {
  const Graph g = random_regular(100, static_cast<int>(state.range(0)), 7);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_min_forest(g, ++seed).forest.path_count());
}
BENCHMARK(BM_SampleMinForest)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const Graph g = random_regular(static_cast<Vertex>(state.range(0)), static_cast<int>(state.range(1)), 8);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ++seed;
    benchmark::DoNotOptimize(decompose_linear_arboricity(g, seed, pipeline_params(seed)).decomposition.total_parts);
  }
}
BENCHMARK(BM_Decompose)->Args({200, 20})->Args({500, 50})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace linforest
