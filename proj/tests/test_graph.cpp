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

#include <algorithm>
#include <set>

#include "linforest/generators.hpp"
#include "linforest/graph.hpp"
#include "linforest/regularize.hpp"
#include "linforest/rng.hpp"
#include "linforest/two_factor.hpp"
#include "test_util.hpp"

namespace linforest {
namespace {

using testing::graph_of;

bool is_simple(const Graph& g) {
  std::set<Edge> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v || !seen.insert(e).second) return false;
  }
  return true;
}

TEST(LoadGraph, ParsesCycle) {
  const Graph g = load_graph("4 4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 4u);
  EXPECT_TRUE(g.is_regular(2));
  EXPECT_TRUE(g.has_edge(3, 0));
}

TEST(LoadGraph, EdgelessAndErrors) {
  const Graph g = load_graph("3 0");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 0u);
  EXPECT_THROW(load_graph("2 1\n0 0"), ParseError);
  EXPECT_THROW(load_graph("2 1\n0 2"), ParseError);
  EXPECT_THROW(load_graph("3 2\n0 1\n1 0"), ParseError);
  EXPECT_THROW(load_graph("3 2\n0 1"), ParseError);
  EXPECT_THROW(load_graph(""), ParseError);
  EXPECT_THROW(load_graph("2 1\n0 x"), ParseError);
}

TEST(LoadGraph, SaveRoundTrip) {
  const Graph g = random_regular(30, 4, 5);
  EXPECT_EQ(load_graph(save_graph(g)), g);
}

TEST(GraphCtor, RejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph(2, loop), InvalidArgument);
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph(2, twice), InvalidArgument);
  const std::vector<Edge> out{{0, 5}};
  EXPECT_THROW(Graph(2, out), InvalidArgument);
}

TEST(RandomRegular, SmallCyclesAreForced) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph c4 = random_regular(4, 2, s);
    EXPECT_TRUE(c4.is_regular(2));
    EXPECT_TRUE(is_connected(c4));
    const Graph c5 = random_regular(5, 2, s);
    EXPECT_TRUE(c5.is_regular(2));
    EXPECT_TRUE(is_connected(c5));
  }
}

TEST(RandomRegular, Errors) {
  EXPECT_THROW(random_regular(3, 1, 1), InvalidArgument);
  EXPECT_THROW(random_regular(4, 4, 1), InvalidArgument);
  EXPECT_THROW(random_bipartite_regular(5, 2, 1), InvalidArgument);
}

TEST(RandomRegular, SimpleRegularAndDeterministic) {
  for (int d : {1, 3, 6, 12, 30}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Graph g = random_regular(40, d, s);
      EXPECT_TRUE(g.is_regular(d));
      EXPECT_TRUE(is_simple(g));
      EXPECT_EQ(g, random_regular(40, d, s));
    }
  }
}

TEST(RandomRegular, BipartiteIsBipartite) {
  for (int d : {1, 2, 5, 10}) {
    const Graph g = random_bipartite_regular(40, d, 3);
    EXPECT_TRUE(g.is_regular(d));
    const Bipartition b = bipartition(g);
    ASSERT_TRUE(b.bipartite());
    for (const Edge& e : g.edges()) EXPECT_NE(b.side[e.u], b.side[e.v]);
  }
}

TEST(RandomRegular, ConnectedVariant) {
  const Graph g = random_connected_regular(100, 3, 9);
  EXPECT_TRUE(g.is_regular(3));
  EXPECT_TRUE(is_connected(g));
}

TEST(DisjointCliques, Shapes) {
  const Graph k4 = disjoint_cliques(1, 3);
  EXPECT_EQ(k4, complete_graph(4));
  const Graph two = disjoint_cliques(2, 3);
  EXPECT_EQ(two.n(), 8);
  EXPECT_EQ(two.m(), 12u);
  EXPECT_EQ(connected_components(two), 2u);
  const Graph tri = disjoint_cliques(3, 2);
  EXPECT_EQ(tri.n(), 9);
  EXPECT_EQ(tri.m(), 9u);
  EXPECT_EQ(connected_components(tri), 3u);
}

TEST(Components, CountsIsolatedVertices) {
  EXPECT_EQ(connected_components(edgeless_graph(4)), 4u);
  EXPECT_EQ(connected_components(Graph(0)), 0u);
  EXPECT_TRUE(is_connected(petersen_graph()));
}

TEST(Bipartition, Examples) {
  const Bipartition c4 = bipartition(cycle_graph(4));
  ASSERT_TRUE(c4.bipartite());
  EXPECT_EQ(c4.side, (std::vector<int>{0, 1, 0, 1}));
  const Bipartition k3 = bipartition(complete_graph(3));
  EXPECT_FALSE(k3.bipartite());
  std::vector<Vertex> cyc = k3.odd_cycle;
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<Vertex>{0, 1, 2}));
  const Bipartition e2 = bipartition(edgeless_graph(2));
  EXPECT_TRUE(e2.bipartite());
  EXPECT_EQ(e2.side, (std::vector<int>{0, 0}));
}

TEST(Bipartition, OddCycleIsACycle) {
  const Graph g = petersen_graph();
  const Bipartition b = bipartition(g);
  ASSERT_FALSE(b.bipartite());
  const auto& c = b.odd_cycle;
  EXPECT_EQ(c.size() % 2, 1u);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(g.has_edge(c[i], c[(i + 1) % c.size()]));
}

TEST(Complement, OfCycle) {
  const Graph c = complement(cycle_graph(5));
  EXPECT_TRUE(c.is_regular(2));
  EXPECT_FALSE(c.has_edge(0, 1));
  EXPECT_TRUE(c.has_edge(0, 2));
}

TEST(Regularize, IdentityOnRegular) {
  const Graph g = petersen_graph();
  const EmbeddingMap m = regularize(g, 3);
  EXPECT_EQ(m.host, g);
  EXPECT_EQ(m.auxiliary_vertices(), 0);
}

TEST(Regularize, PathToTriangle) {
  const EmbeddingMap m = regularize(path_graph(3), 2);
  EXPECT_EQ(m.host, complete_graph(3));
  EXPECT_EQ(m.auxiliary_vertices(), 0);
  EXPECT_EQ(m.added_original_edges, 1u);
}

TEST(Regularize, StarIntoFourRegular) {
  const Graph star = star_graph(3);
  const EmbeddingMap m = regularize(star, 4);
  EXPECT_TRUE(is_regular_embedding(star, m, 4));
  EXPECT_TRUE(m.host.is_regular(4));
  for (const Edge& e : star.edges()) EXPECT_TRUE(m.host.has_edge(e.u, e.v));
  EXPECT_THROW(regularize(star, 2), InvalidArgument);
}

TEST(Regularize, RandomIrregularInputs) {
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Edge> edges;
    const Vertex n = 5 + static_cast<Vertex>(rng.below(20));
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng.below(4) == 0) edges.emplace_back(a, b);
      }
    }
    const Graph g(n, edges);
    for (int r : {g.max_degree(), g.max_degree() + 1, 2 * ((g.max_degree() + 1) / 2) + 2}) {
      const EmbeddingMap m = regularize(g, r);
      EXPECT_TRUE(is_regular_embedding(g, m, r)) << "trial " << trial << " r " << r;
    }
  }
}

TEST(HavelHakimi, GraphicAndNonGraphic) {
  const std::vector<int> ok{2, 2, 2};
  const auto edges = havel_hakimi(ok);
  ASSERT_TRUE(edges.has_value());
  EXPECT_EQ(edges->size(), 3u);
  const std::vector<int> bad{3, 1};
  EXPECT_FALSE(havel_hakimi(bad).has_value());
}

TEST(TwoFactor, Examples) {
  EXPECT_EQ(two_factor(cycle_graph(6)), cycle_graph(6));
  const Graph k5 = complete_graph(5);
  const Graph h = two_factor(k5);
  EXPECT_TRUE(h.is_regular(2));
  EXPECT_TRUE(is_connected(h));
  EXPECT_THROW(two_factor(complete_graph(4)), InvalidArgument);
}

TEST(TwoFactor, SpanningSubgraphOfEvenRegular) {
  for (int d : {2, 4, 8, 20}) {
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Graph g = random_regular(60, d, s);
      const Graph h = two_factor(g);
      EXPECT_EQ(h.n(), g.n());
      EXPECT_TRUE(h.is_regular(2));
      for (const Edge& e : h.edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
    }
  }
}

TEST(EulerOrientation, Balanced) {
  const Graph g = random_regular(50, 6, 2);
  const auto arcs = euler_orientation(g);
  EXPECT_EQ(arcs.size(), g.m());
  std::vector<int> out(50, 0), in(50, 0);
  for (const Arc& a : arcs) {
    ++out[static_cast<std::size_t>(a.tail)];
    ++in[static_cast<std::size_t>(a.head)];
    EXPECT_TRUE(g.has_edge(a.tail, a.head));
  }
  for (int v = 0; v < 50; ++v) {
    EXPECT_EQ(out[static_cast<std::size_t>(v)], 3);
    EXPECT_EQ(in[static_cast<std::size_t>(v)], 3);
  }
}

TEST(Rng, DeriveSeedSeparatesChildren) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  Rng r(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}

}  // namespace
}  // namespace linforest
