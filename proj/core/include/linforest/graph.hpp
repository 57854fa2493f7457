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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linforest/types.hpp"

namespace linforest {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Construction rejects loops, parallel edges and
/// out-of-range endpoints, so every Graph value is simple and symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex n() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  int min_degree() const;
  bool is_regular(int r) const;

  /// O(log deg) lookup.
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool contains_vertex(Vertex v) const { return v >= 0 && v < n(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Parses the "n m" + m lines of "u v" edge-list format.
Graph load_graph(std::string_view text);

/// Emits the edge-list format with edges in lexicographic order.
std::string save_graph(const Graph& g);

/// Number of connected components (isolated vertices count).
std::size_t connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Result of a BFS 2-coloring attempt.
struct Bipartition {
  /// side[v] in {0,1} when the graph is bipartite; empty otherwise.
  std::vector<int> side;
  /// Vertices of an odd cycle in cyclic order when not bipartite.
  std::vector<Vertex> odd_cycle;

  bool bipartite() const { return odd_cycle.empty(); }
};

/// Deterministic BFS coloring: components are started from their smallest
/// vertex, which receives side 0.
Bipartition bipartition(const Graph& g);

}  // namespace linforest
