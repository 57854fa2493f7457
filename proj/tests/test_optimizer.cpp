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

#include <gtest/gtest.h>

#include <cmath>

#include "linforest/corpus.hpp"
#include "linforest/generators.hpp"
#include "linforest/optimizer.hpp"
#include "linforest/oracle.hpp"
#include "test_util.hpp"

namespace linforest {
namespace {

using testing::fixed_of;
using testing::forest_of;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

TEST(MinimizeForest, Examples) {
  const Graph k4 = complete_graph(4);
  const auto r = minimize_forest(trivial_forest(k4));
  EXPECT_EQ(r.forest.path_count(), 1u);
  EXPECT_TRUE(r.certified_minimum);
  const Graph two = disjoint_cliques(2, 3);
  EXPECT_EQ(minimize_forest(trivial_forest(two)).forest.path_count(), 2u);
  const Graph e3 = edgeless_graph(3);
  const auto e = minimize_forest(trivial_forest(e3));
  EXPECT_EQ(e.forest.path_count(), 3u);
  EXPECT_EQ(e.merges, 0u);
}

TEST(MinimizeForest, StarNeedsRotationFreePaths) {
  // K_{1,3} has minimum path cover 2 and no Hamilton path.
  const Graph star = star_graph(3);
  const auto r = minimize_forest(trivial_forest(star));
  EXPECT_EQ(r.forest.path_count(), brute_min_path_cover(star));
  EXPECT_TRUE(r.exhaustive);
  EXPECT_FALSE(r.certified_minimum);
}

TEST(MinimizeForest, NeverIncreasesPathsAndStaysInGraph) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Graph g = random_regular(120, 3 + static_cast<int>(s % 4), s);
    const LinearForest start = greedy_path_cover(g, s);
    const auto r = minimize_forest(start);
    EXPECT_LE(r.forest.path_count(), start.path_count());
    EXPECT_EQ(start.path_count() - r.forest.path_count(), r.merges);
    EXPECT_TRUE(testing::is_linear_forest(g.n(), r.forest.edges()));
    for (const Edge& e : r.forest.edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
  }
}

TEST(MinimizeForest, MatchesBruteForceOnCorpus) {
  OptimizerParams p;
  p.rotation_budget = std::numeric_limits<std::size_t>::max();
  for (const auto& cg : small_corpus(8)) {
    const std::size_t want = brute_min_path_cover(cg.graph);
    EXPECT_EQ(minimize_forest(trivial_forest(cg.graph), p).forest.path_count(), want) << cg.name;
    for (std::uint64_t s = 0; s < 4; ++s) {
      EXPECT_EQ(minimize_forest(greedy_path_cover(cg.graph, s), p).forest.path_count(), want) << cg.name;
    }
  }
}

TEST(MinimizeForest, RegularPathBound) {
  for (int d : {3, 4, 7}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Graph g = random_regular(80, d, s);
      const auto r = minimize_forest(greedy_path_cover(g, s));
      EXPECT_LE(r.forest.path_count(), ceil_div(2 * 80, static_cast<std::size_t>(d + 1)));
    }
  }
}

TEST(MinimizeForest, BipartiteModeBound) {
  OptimizerParams p;
  p.bipartite_mode = true;
  for (int d : {2, 3, 5}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Graph g = random_bipartite_regular(60, d, s);
      const auto r = minimize_forest(trivial_forest(g), p);
      EXPECT_LE(r.forest.path_count(), ceil_div(60, static_cast<std::size_t>(d + 1)));
    }
  }
}

TEST(FixEndpointStep, CycleExample) {
  const Graph c4 = cycle_graph(4);
  const LinearForest f = forest_of(c4, {{0, 1, 2, 3}});
  OptimizerParams p;
  p.exact_components = true;
  const FixStep s = fix_endpoint_step(f, fixed_of(4, {3}), p);
  EXPECT_EQ(s.u, 3);
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.size_before, 2u);
  EXPECT_EQ(s.size_after, 0u);
  EXPECT_EQ(s.predicted_drop, 2u);
  EXPECT_EQ(s.fixed.to_list(), (std::vector<Vertex>{0, 3}));
}

TEST(FixEndpointStep, TriangleExample) {
  const Graph k3 = complete_graph(3);
  const LinearForest f = forest_of(k3, {{0, 1, 2}});
  OptimizerParams p;
  p.exact_components = true;
  const FixStep s = fix_endpoint_step(f, fixed_of(3, {2}), p);
  EXPECT_EQ(s.u, 2);
  EXPECT_EQ(s.v, 0);
  EXPECT_EQ(s.predicted_drop, 2u);
  EXPECT_THROW(fix_endpoint_step(f, fixed_of(3, {0, 2}), p), InvalidArgument);
}

TEST(FixEndpointStep, ShrinkageOnMinimumForests) {
  OptimizerParams p;
  p.exact_components = true;
  p.component_budget = 1'000'000;
  for (const auto& cg : small_corpus(7)) {
    const auto forests = enumerate_min_forests(cg.graph);
    for (std::size_t i = 0; i < forests.size() && i < 6; ++i) {
      const LinearForest start = LinearForest::from_edges(cg.graph, forests[i]);
      FixedEndpoints x(cg.graph.n());
      LinearForest f = start;
      while (x.size() < 2 * f.path_count()) {
        const FixStep s = fix_endpoint_step(f, x, p);
        if (s.u != kNoVertex) EXPECT_LE(s.size_after + s.predicted_drop, s.size_before) << cg.name;
        EXPECT_LT(s.size_after, s.size_before) << cg.name;
        EXPECT_GT(s.forest.endpoint_multiplicity(s.v), 0);
        f = s.forest;
        x = s.fixed;
      }
    }
  }
}

TEST(SampleMinForest, ReturnsFullyFixedMinimumForests) {
  for (const auto& cg : small_corpus(7)) {
    const std::size_t want = brute_min_path_cover(cg.graph);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const SampleResult r = sample_min_forest(cg.graph, s);
      EXPECT_EQ(r.forest.path_count(), want) << cg.name;
      EXPECT_EQ(r.steps, 2 * want);
    }
  }
}

TEST(SampleMinForest, RefinedVariantStaysMinimal) {
  OptimizerParams p;
  p.refine_trials = 20;
  const Graph g = random_regular(40, 4, 3);
  const SampleResult plain = sample_min_forest(g, 5);
  const SampleResult refined = sample_min_forest(g, 5, p);
  EXPECT_EQ(refined.forest.path_count(), plain.forest.path_count());
}

TEST(EndpointProbs, EdgelessAndSingleTrial) {
  const Graph e2 = edgeless_graph(2);
  const EndpointTable t = estimate_endpoint_probs(e2, 5, 1);
  EXPECT_EQ(t.frequency, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(t.mean_multiplicity, (std::vector<double>{2.0, 2.0}));
  const Graph c5 = cycle_graph(5);
  const EndpointTable one = estimate_endpoint_probs(c5, 1, 2);
  double ends = 0;
  for (double f : one.frequency) {
    EXPECT_TRUE(f == 0.0 || f == 1.0);
    ends += f;
  }
  EXPECT_EQ(ends, 2.0);
  EXPECT_THROW(estimate_endpoint_probs(c5, 0, 1), InvalidArgument);
}

TEST(EndpointProbs, CompleteGraphNearUniform) {
  const Graph k5 = complete_graph(5);
  const std::size_t trials = 4000;
  const EndpointTable t = estimate_endpoint_probs(k5, trials, 7);
  const double sigma = std::sqrt(0.4 * 0.6 / static_cast<double>(trials));
  for (double f : t.frequency) EXPECT_NEAR(f, 0.4, 5 * sigma);
}

TEST(EndpointProbs, CycleHalf) {
  const Graph c4 = cycle_graph(4);
  const EndpointTable t = estimate_endpoint_probs(c4, 2000, 9);
  const double sigma = std::sqrt(0.25 / 2000.0);
  for (double f : t.frequency) EXPECT_NEAR(f, 0.5, 5 * sigma);
}

TEST(EndpointProbs, CorpusMarginalsBelowTarget) {
  OptimizerParams p;
  p.exact_components = true;
  for (const auto& cg : small_corpus(8)) {
    const int d = cg.graph.max_degree();
    const EndpointTable t = estimate_endpoint_probs(cg.graph, 200, 13, p);
    for (std::size_t v = 0; v < t.frequency.size(); ++v) {
      EXPECT_LE(t.frequency[v], 16.0 / (d + 1) + 5 * t.stderr_[v]) << cg.name;
    }
  }
}

}  // namespace
}  // namespace linforest
