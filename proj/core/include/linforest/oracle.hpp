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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "linforest/corpus.hpp"
#include "linforest/linear_forest.hpp"

namespace linforest {

/// Exact minimum number of paths in a spanning linear forest, by dynamic
/// programming over (covered set, end of the current path). n <= 20.
std::size_t brute_min_path_cover(const Graph& g);

/// Largest edge count of a linear forest, by enumerating edge subsets.
/// m <= 24. The minimum path count is n minus this value.
std::size_t max_linear_forest_edges(const Graph& g);

/// Every minimum spanning linear forest, as sorted edge lists, by edge
/// subset enumeration. m <= 24.
std::vector<std::vector<Edge>> enumerate_min_forests(const Graph& g);

inline constexpr std::size_t kBruteStateLimit = 1'000'000;

/// C(F,X) by exhaustive search with its own move generator: every triple
/// (v, u, w) with v a free endpoint, uv a non-forest edge and uw a forest
/// edge is tried, and kept when F - uw + uv is still a linear forest.
/// Throws InvalidArgument past `state_limit` forests.
std::vector<Vertex> brute_component(const LinearForest& f, const FixedEndpoints& x,
                                    std::size_t state_limit = kBruteStateLimit);

/// e(A,B); an edge inside A ∩ B is counted once.
std::size_t count_edges_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b);

struct CheckReport {
  std::string lemma;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> values;

  long long value(const std::string& key) const;
};

/// 4|C| >= (d+1)|End\X|, or 2|C| >= (d+1)|End\X| when `bipartite_form`
/// (which requires End\X inside one side of a bipartite g).
CheckReport check_component_bound(const LinearForest& f, const FixedEndpoints& x, bool bipartite_form = false);

/// B_0 = ∅ and, doubled to stay in integers,
/// 2e(C,B1) >= d|B1| + d|C1| + 2d|C0| - 4e(C).
CheckReport check_b0_and_doublecount(const LinearForest& f, const FixedEndpoints& x);

/// |C(F, X+v)| <= |C(F,X)| - |N(u) ∩ C(F,X)| for v in End\X, u in N(v) ∩ B_1.
CheckReport check_fix_shrinkage(const LinearForest& f, const FixedEndpoints& x, Vertex v, Vertex u);

/// Shortest closed walk through every vertex, by BFS over (vertex, visited
/// set). n <= 10.
std::size_t brute_shortest_tour(const Graph& g);

/// Every sub-multiset of End(f) if |End(f)| <= 6, else `samples` random ones.
std::vector<FixedEndpoints> sample_fixed_sets(const LinearForest& f, std::uint64_t seed, std::size_t samples = 50);

struct SweepRow {
  std::string graph;
  /// Index into enumerate_min_forests(graph).
  std::size_t forest = 0;
  std::vector<Vertex> fixed;
  CheckReport report;
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t forests = 0;
  std::size_t fixed_sets = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

/// Runs every lemma check on every minimum forest of every (regular) graph
/// and every sampled X, plus a comparison of component_exact against
/// brute_component ("component_equivalence"). `row` sees each report.
SweepSummary lemma_sweep(const std::vector<CorpusGraph>& graphs, std::uint64_t seed,
                         const std::function<void(const SweepRow&)>& row = {});

}  // namespace linforest
