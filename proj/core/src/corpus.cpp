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

#include "linforest/corpus.hpp"

#include <algorithm>
#include <string>

#include "linforest/generators.hpp"

namespace linforest {

namespace {

// Extends a partial mapping a -> b vertex by vertex in a's label order.
bool extend_iso(const Graph& a, const Graph& b, std::vector<Vertex>& map, std::vector<char>& used, Vertex next) {
  if (next == a.n()) return true;
  for (Vertex cand = 0; cand < b.n(); ++cand) {
    if (used[static_cast<std::size_t>(cand)] || a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (Vertex prev = 0; prev < next && ok; ++prev) {
      ok = a.has_edge(prev, next) == b.has_edge(map[static_cast<std::size_t>(prev)], cand);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(next)] = cand;
    used[static_cast<std::size_t>(cand)] = 1;
    if (extend_iso(a, b, map, used, next + 1)) return true;
    used[static_cast<std::size_t>(cand)] = 0;
  }
  return false;
}

struct Builder {
  Vertex n;
  int d;
  std::vector<int> deficit;
  std::vector<Edge> edges;
  std::vector<std::vector<char>> adj;
  std::vector<Graph> found;

  void place(Vertex v) {
    while (v < n && deficit[static_cast<std::size_t>(v)] == 0) ++v;
    if (v == n) {
      accept();
      return;
    }
    choose(v, v + 1);
  }

  // Gives v its remaining neighbours among labels >= from.
  void choose(Vertex v, Vertex from) {
    if (deficit[static_cast<std::size_t>(v)] == 0) {
      place(v + 1);
      return;
    }
    for (Vertex y = from; y < n; ++y) {
      if (deficit[static_cast<std::size_t>(y)] == 0 || adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(y)]) continue;
      link(v, y, true);
      choose(v, y + 1);
      link(v, y, false);
    }
  }

  void link(Vertex v, Vertex y, bool on) {
    const int delta = on ? -1 : 1;
    deficit[static_cast<std::size_t>(v)] += delta;
    deficit[static_cast<std::size_t>(y)] += delta;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(y)] = on;
    adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)] = on;
    if (on) {
      edges.emplace_back(v, y);
    } else {
      edges.pop_back();
    }
  }

  void accept() {
    Graph g(n, edges);
    if (!is_connected(g)) return;
    for (const Graph& h : found) {
      if (are_isomorphic(g, h)) return;
    }
    found.push_back(std::move(g));
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> da;
  std::vector<int> db;
  for (Vertex v = 0; v < a.n(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> map(static_cast<std::size_t>(a.n()), kNoVertex);
  std::vector<char> used(static_cast<std::size_t>(b.n()), 0);
  return extend_iso(a, b, map, used, 0);
}

std::vector<Graph> connected_regular_graphs(Vertex n, int d) {
  if (d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0) return {};
  Builder b{n, d, std::vector<int>(static_cast<std::size_t>(n), d), {},
            std::vector<std::vector<char>>(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)),
            {}};
  for (Vertex y = 1; y <= d; ++y) b.link(0, y, true);
  b.place(1);
  return std::move(b.found);
}

std::vector<CorpusGraph> small_corpus(Vertex max_n) {
  std::vector<CorpusGraph> out;
  for (int d : {2, 3}) {
    for (Vertex n = d + 1; n <= max_n; ++n) {
      const auto graphs = connected_regular_graphs(n, d);
      for (std::size_t k = 0; k < graphs.size(); ++k) {
        out.push_back({"reg_d" + std::to_string(d) + "_n" + std::to_string(n) + "_" + std::to_string(k), graphs[k]});
      }
    }
  }
  return out;
}

std::vector<CorpusGraph> named_fixtures() {
  return {{"C4", cycle_graph(4)},           {"K3", complete_graph(3)},
          {"K4", complete_graph(4)},        {"K5", complete_graph(5)},
          {"K33", complete_bipartite(3, 3)}, {"Petersen", petersen_graph()}};
}

}  // namespace linforest
