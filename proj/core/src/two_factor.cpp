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

#include "linforest/two_factor.hpp"

#include <deque>
#include <limits>
#include <string>

namespace linforest {

std::vector<Arc> euler_orientation(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) % 2 != 0) throw InvalidArgument("euler_orientation: odd degree vertex");
  }
  // Edge ids by incidence; each undirected edge gets one id.
  std::vector<Edge> edges = g.edges();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(n);
  for (std::size_t id = 0; id < edges.size(); ++id) {
    inc[static_cast<std::size_t>(edges[id].u)].emplace_back(edges[id].v, id);
    inc[static_cast<std::size_t>(edges[id].v)].emplace_back(edges[id].u, id);
  }
  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  // Iterative Hierholzer; the orientation is the traversal direction, which
  // is balanced regardless of how sub-circuits are spliced.
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      auto& c = cursor[static_cast<std::size_t>(x)];
      const auto& list = inc[static_cast<std::size_t>(x)];
      while (c < list.size() && used[list[c].second]) ++c;
      if (c == list.size()) {
        stack.pop_back();
        continue;
      }
      const auto [y, id] = list[c];
      used[id] = 1;
      arcs.push_back({x, y});
      stack.push_back(y);
    }
  }
  return arcs;
}

std::vector<Vertex> bipartite_matching(const std::vector<std::vector<Vertex>>& left_adj,
                                       Vertex right_size) {
  const std::size_t left = left_adj.size();
  const std::size_t right = static_cast<std::size_t>(right_size);
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<Vertex> match_left(left, kNoVertex);
  std::vector<Vertex> match_right(right, kNoVertex);
  std::vector<int> dist(left, kInf);

  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t a = 0; a < left; ++a) {
      if (match_left[a] == kNoVertex) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (Vertex b : left_adj[a]) {
        const Vertex partner = match_right[static_cast<std::size_t>(b)];
        if (partner == kNoVertex) {
          found = true;
        } else if (dist[static_cast<std::size_t>(partner)] == kInf) {
          dist[static_cast<std::size_t>(partner)] = dist[a] + 1;
          queue.push_back(static_cast<std::size_t>(partner));
        }
      }
    }
    return found;
  };

  // Iterative layered DFS for augmenting paths.
  std::vector<std::size_t> it(left, 0);
  auto dfs = [&](std::size_t root) {
    std::vector<std::size_t> path{root};
    while (!path.empty()) {
      const std::size_t a = path.back();
      if (it[a] == left_adj[a].size()) {
        dist[a] = kInf;
        path.pop_back();
        if (!path.empty()) ++it[path.back()];
        continue;
      }
      const Vertex b = left_adj[a][it[a]];
      const Vertex partner = match_right[static_cast<std::size_t>(b)];
      if (partner == kNoVertex) {
        for (std::size_t x : path) {
          const Vertex y = left_adj[x][it[x]];
          match_left[x] = y;
          match_right[static_cast<std::size_t>(y)] = static_cast<Vertex>(x);
        }
        return true;
      }
      if (dist[static_cast<std::size_t>(partner)] == dist[a] + 1) {
        path.push_back(static_cast<std::size_t>(partner));
      } else {
        ++it[a];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::size_t a = 0; a < left; ++a) {
      if (match_left[a] == kNoVertex) dfs(a);
    }
  }
  return match_left;
}

Graph two_factor(const Graph& g) {
  if (g.n() == 0) return Graph(0);
  const int degree = g.degree(0);
  if (degree < 2 || degree % 2 != 0 || !g.is_regular(degree)) {
    throw InvalidArgument("two_factor: graph is not 2k-regular with k >= 1");
  }
  const std::vector<Arc> arcs = euler_orientation(g);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.n()));
  for (const Arc& a : arcs) out[static_cast<std::size_t>(a.tail)].push_back(a.head);
  const std::vector<Vertex> match = bipartite_matching(out, g.n());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex w = match[static_cast<std::size_t>(v)];
    if (w == kNoVertex) throw InternalError("two_factor: regular bipartite matching not perfect");
    edges.emplace_back(v, w);
  }
  return Graph(g.n(), edges);
}

}  // namespace linforest
