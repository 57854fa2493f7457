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

#include "linforest/generators.hpp"
#include "linforest/optimizer.hpp"
#include "linforest/rng.hpp"
#include "linforest/rotation_component.hpp"

namespace linforest {
namespace {

void BM_EnumerateAndRotate(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const Graph g = random_regular(n, 5, 1);
  LinearForest f = greedy_path_cover(g, 1);
  Rng rng(2);
  std::vector<RotationMove> moves;
  for (auto _ : state) {
    enumerate_rotations_into(f, {}, moves);
    f.rotate_unchecked(moves[static_cast<std::size_t>(rng.below(moves.size()))]);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EnumerateAndRotate)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ComponentGreedy(benchmark::State& state) {
  const auto budget = static_cast<std::size_t>(state.range(0));
  const Graph g = random_regular(1000, 10, 3);
  const LinearForest f = minimize_forest(greedy_path_cover(g, 3)).forest;
  for (auto _ : state) benchmark::DoNotOptimize(component_greedy(f, FixedEndpoints(g.n()), budget).size());
}
BENCHMARK(BM_ComponentGreedy)->Arg(300)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_MinimizeForest(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const Graph g = random_regular(n, d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(minimize_forest(greedy_path_cover(g, 5)).forest.path_count());
}
BENCHMARK(BM_MinimizeForest)->Args({200, 3})->Args({1000, 3})->Args({1000, 20})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace linforest
