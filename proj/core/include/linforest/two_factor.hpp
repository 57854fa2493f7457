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

#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

/// Directed arc produced by an Euler orientation.
struct Arc {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;
};

/// Orients every edge of an even-degree graph along Euler circuits of its
/// components, so in-degree equals out-degree at every vertex.
std::vector<Arc> euler_orientation(const Graph& g);

/// Maximum matching in a bipartite graph given as left-side adjacency into
/// [0, right_size). Hopcroft–Karp. Returns match of each left vertex or -1.
std::vector<Vertex> bipartite_matching(const std::vector<std::vector<Vertex>>& left_adj,
                                       Vertex right_size);

/// Spanning 2-regular subgraph of a 2k-regular graph (k >= 1).
///
/// Euler-orient, form the k-regular bipartite out/in graph, take one perfect
/// matching and read the matched arcs back as undirected edges.
Graph two_factor(const Graph& g);

}  // namespace linforest
