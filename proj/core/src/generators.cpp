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

#include "linforest/generators.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "linforest/rng.hpp"

namespace linforest {
namespace {

class AdjacencyFilter {
 public:
  explicit AdjacencyFilter(Vertex n) : adj_(static_cast<std::size_t>(n)) {}

  bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adj_[static_cast<std::size_t>(a)];
    return std::find(list.begin(), list.end(), b) != list.end();
  }
  void add(Vertex a, Vertex b) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
};

void swap_remove(std::vector<Vertex>& v, std::size_t i) {
  v[i] = v.back();
  v.pop_back();
}

// One Steger–Wormald pass. `left` and `right` are the stub pools a pair is
// drawn from; for non-bipartite graphs both refer to the same pool.
std::optional<std::vector<Edge>> pair_stubs(Vertex n, std::vector<Vertex> left,
                                            std::vector<Vertex> right, bool bipartite, Rng& rng) {
  AdjacencyFilter filter(n);
  std::vector<Edge> edges;
  std::vector<Vertex>& pool_a = left;
  std::vector<Vertex>& pool_b = bipartite ? right : left;
  std::size_t failures = 0;
  while (!pool_a.empty()) {
    std::size_t i = static_cast<std::size_t>(rng.below(pool_a.size()));
    std::size_t j = static_cast<std::size_t>(rng.below(pool_b.size()));
    if (!bipartite && i == j) continue;
    Vertex a = pool_a[i];
    Vertex b = pool_b[j];
    if (a != b && !filter.adjacent(a, b)) {
      filter.add(a, b);
      edges.emplace_back(a, b);
      if (bipartite) {
        swap_remove(pool_a, i);
        swap_remove(pool_b, j);
      } else {
        swap_remove(pool_a, std::max(i, j));
        swap_remove(pool_a, std::min(i, j));
      }
      failures = 0;
      continue;
    }
    if (++failures < 64 + 8 * pool_a.size()) continue;
    // Many rejections in a row: check whether any admissible pair is left.
    bool any = false;
    for (std::size_t x = 0; x < pool_a.size() && !any; ++x) {
      for (std::size_t y = bipartite ? 0 : x + 1; y < pool_b.size() && !any; ++y) {
        any = pool_a[x] != pool_b[y] && !filter.adjacent(pool_a[x], pool_b[y]);
      }
    }
    if (!any) return std::nullopt;
    failures = 0;
  }
  return edges;
}

std::vector<Vertex> make_stubs(Vertex begin, Vertex end, int d) {
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(end - begin) * static_cast<std::size_t>(d));
  for (Vertex v = begin; v < end; ++v) {
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  }
  return stubs;
}

Graph bipartite_complement(const Graph& g, Vertex half) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < half; ++a) {
    for (Vertex b = half; b < 2 * half; ++b) {
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(g.n(), edges);
}

}  // namespace

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph(g.n(), edges);
}

Graph random_regular(Vertex n, int d, std::uint64_t seed, PairingOptions options) {
  if (n < 0 || d < 0) throw InvalidArgument("random_regular: negative parameter");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw InvalidArgument("random_regular: n*d must be even (n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + ")");
  }
  if (d > 0 && d >= n) throw InvalidArgument("random_regular: need d < n");
  if (d == 0) return Graph(n);
  if (2 * d > n - 1) {
    return complement(random_regular(n, n - 1 - d, seed, options));
  }
  Rng rng(seed);
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    auto edges = pair_stubs(n, make_stubs(0, n, d), {}, false, rng);
    if (edges) return Graph(n, *edges);
  }
  throw InvalidArgument("random_regular: rejection budget exceeded");
}

Graph random_bipartite_regular(Vertex n, int d, std::uint64_t seed, PairingOptions options) {
  if (n < 0 || d < 0) throw InvalidArgument("random_bipartite_regular: negative parameter");
  if (n % 2 != 0) throw InvalidArgument("random_bipartite_regular: n must be even");
  const Vertex half = n / 2;
  if (d > half) throw InvalidArgument("random_bipartite_regular: need d <= n/2");
  if (d == 0) return Graph(n);
  if (2 * d > half) {
    return bipartite_complement(random_bipartite_regular(n, half - d, seed, options), half);
  }
  Rng rng(seed);
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    auto edges = pair_stubs(n, make_stubs(0, half, d), make_stubs(half, n, d), true, rng);
    if (edges) return Graph(n, *edges);
  }
  throw InvalidArgument("random_bipartite_regular: rejection budget exceeded");
}

Graph random_connected_regular(Vertex n, int d, std::uint64_t seed, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g = random_regular(n, d, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (is_connected(g)) return g;
  }
  throw InvalidArgument("random_connected_regular: no connected sample within attempt limit");
}

Graph disjoint_cliques(int k, int d) {
  if (k < 1 || d < 1) throw InvalidArgument("disjoint_cliques: need k >= 1 and d >= 1");
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) {
    const Vertex base = c * (d + 1);
    for (Vertex a = 0; a <= d; ++a) {
      for (Vertex b = a + 1; b <= d; ++b) edges.emplace_back(base + a, base + b);
    }
  }
  return Graph(k * (d + 1), edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw InvalidArgument("cycle_graph: need n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < a; ++x) {
    for (Vertex y = 0; y < b; ++y) edges.emplace_back(x, a + y);
  }
  return Graph(a + b, edges);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph edgeless_graph(Vertex n) { return Graph(n); }

}  // namespace linforest
