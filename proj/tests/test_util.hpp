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

#include <initializer_list>
#include <vector>

#include "linforest/graph.hpp"
#include "linforest/linear_forest.hpp"

namespace linforest::testing {

inline Graph graph_of(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> es) {
  std::vector<Edge> edges;
  for (auto [a, b] : es) edges.emplace_back(a, b);
  return Graph(n, edges);
}

// Forest whose paths are the given vertex sequences; unlisted vertices are isolated.
inline LinearForest forest_of(const Graph& g, std::initializer_list<std::vector<Vertex>> paths) {
  std::vector<Edge> edges;
  for (const auto& p : paths) {
    for (std::size_t i = 1; i < p.size(); ++i) edges.emplace_back(p[i - 1], p[i]);
  }
  return LinearForest::from_edges(g, edges);
}

inline FixedEndpoints fixed_of(Vertex n, std::initializer_list<Vertex> vs) {
  FixedEndpoints x(n);
  for (Vertex v : vs) x.add(v);
  return x;
}

// Degree <= 2 and acyclic, from the edge list alone.
inline bool is_linear_forest(Vertex n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const Edge& e : edges) {
    if (++deg[static_cast<std::size_t>(e.u)] > 2 || ++deg[static_cast<std::size_t>(e.v)] > 2) return false;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

}  // namespace linforest::testing
