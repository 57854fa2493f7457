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

#include "linforest/corpus.hpp"
#include "linforest/generators.hpp"
#include "linforest/optimizer.hpp"
#include "linforest/oracle.hpp"
#include "linforest/tour.hpp"
#include "test_util.hpp"

namespace linforest {
namespace {

using testing::forest_of;
using testing::graph_of;

TEST(BuildTour, ClosesHamiltonPaths) {
  const Graph c5 = cycle_graph(5);
  const Tour t5 = build_tour(forest_of(c5, {{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(is_valid_tour(c5, t5));
  EXPECT_EQ(t5.length(), 5u);
  EXPECT_TRUE(is_hamilton_cycle(c5, t5));

  const Graph k4 = complete_graph(4);
  const Tour t4 = build_tour(forest_of(k4, {{0, 1, 2, 3}}));
  EXPECT_EQ(t4.walk, (std::vector<Vertex>{0, 1, 2, 3, 0}));
}

TEST(BuildTour, RotatesUntilEndsMeet) {
  // Path 0-1-2-3-4 in C5 with one chord; the ends 0, 4 are not adjacent.
  const Graph g = graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}, {4, 1}});
  const Tour t = build_tour(forest_of(g, {{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(is_valid_tour(g, t));
  EXPECT_TRUE(is_hamilton_cycle(g, t));
}

TEST(BuildTour, TwoTrianglesWithBridge) {
  const Graph g = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  const Tour t = build_tour(forest_of(g, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_TRUE(is_valid_tour(g, t));
  EXPECT_LE(t.length(), 12u);
  EXPECT_EQ(brute_shortest_tour(g), 8u);
  EXPECT_GE(t.length(), 8u);
  EXPECT_FALSE(is_hamilton_cycle(g, t));
}

TEST(BuildTour, TreesAndTrivialCases) {
  const Graph star = star_graph(3);
  const Tour ts = build_tour(trivial_forest(star));
  EXPECT_TRUE(is_valid_tour(star, ts));
  EXPECT_EQ(ts.length(), 6u);
  const Graph one = edgeless_graph(1);
  const Tour t1 = build_tour(trivial_forest(one));
  EXPECT_TRUE(is_valid_tour(one, t1));
  EXPECT_EQ(t1.length(), 0u);
  const Graph p2 = path_graph(2);
  EXPECT_EQ(build_tour(trivial_forest(p2)).length(), 2u);
  EXPECT_THROW(build_tour(trivial_forest(edgeless_graph(2))), InvalidArgument);
}

TEST(BuildTour, AnyForestGivesShortValidTour) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_connected_regular(60, 3, s);
    for (const LinearForest& f : {trivial_forest(g), greedy_path_cover(g, s)}) {
      const Tour t = build_tour(f);
      EXPECT_TRUE(is_valid_tour(g, t));
      EXPECT_LE(t.length(), 2u * 60);
      EXPECT_EQ(t.length() == 60, is_hamilton_cycle(g, t));
    }
  }
}

TEST(TourValidity, RejectsBrokenWalks) {
  const Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_valid_tour(c4, Tour{{0, 1, 2, 3, 0}}));
  EXPECT_FALSE(is_valid_tour(c4, Tour{{0, 1, 2, 3}}));      // not closed
  EXPECT_FALSE(is_valid_tour(c4, Tour{{0, 2, 3, 0}}));      // 02 not an edge
  EXPECT_FALSE(is_valid_tour(c4, Tour{{0, 1, 2, 1, 0}}));   // misses 3
}

TEST(TourReport, Examples) {
  OptimizerParams p;
  const TourReport k = tour_length_report(complete_graph(6), p, 1);
  EXPECT_DOUBLE_EQ(k.ratio, 1.0);
  const TourReport c = tour_length_report(cycle_graph(9), p, 1);
  EXPECT_DOUBLE_EQ(c.ratio, 1.0);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Graph g = random_connected_regular(200, 4, s);
    const TourReport r = tour_length_report(g, p, s);
    EXPECT_TRUE(is_valid_tour(g, r.tour));
    EXPECT_LE(r.ratio, 1.0 + 20.0 / 4);
  }
}

TEST(TourReport, WithinTwiceOptimumOnCorpus) {
  OptimizerParams p;
  for (const auto& cg : small_corpus(8)) {
    const std::size_t best = brute_shortest_tour(cg.graph);
    const TourReport r = tour_length_report(cg.graph, p, 3);
    EXPECT_GE(r.tour.length(), best) << cg.name;
    EXPECT_LE(r.tour.length(), 2 * best) << cg.name;
  }
}

}  // namespace
}  // namespace linforest
