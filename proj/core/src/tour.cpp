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

#include "linforest/tour.hpp"

#include <algorithm>

namespace linforest {

namespace {

std::vector<Vertex> closed_path(const std::vector<Vertex>& path) {
  std::vector<Vertex> walk = path;
  walk.push_back(path.front());
  return walk;
}

// Hamilton cycle by rotating the ends of a single spanning path.
bool close_single_path(const LinearForest& f, std::size_t budget, Tour& out) {
  const Graph& g = f.host();
  auto ends_adjacent = [&](const LinearForest& s, std::uint32_t, const RotationMove*) {
    const auto [h, t] = s.path_ends(0);
    return g.has_edge(h, t);
  };
  ExploreOptions opt;
  opt.order = ExploreOrder::kDepthFirst;
  opt.max_states = budget;
  const ExploreResult res = explore_rotations(f, FixedEndpoints(f.n()), opt, ends_adjacent);
  if (!res.stopped) return false;
  LinearForest closed = f;
  for (const RotationMove& mv : res.tree.moves_to(res.stop_node)) closed.rotate(mv);
  out.walk = closed_path(closed.paths().front());
  return true;
}

// Euler circuit of the multigraph with every path edge and every tree edge
// doubled, starting at `start`.
std::vector<Vertex> doubled_circuit(Vertex n, const std::vector<Edge>& edges, Vertex start) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> inc(static_cast<std::size_t>(n));
  std::size_t id = 0;
  for (const Edge& e : edges) {
    for (int copy = 0; copy < 2; ++copy, ++id) {
      inc[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
      inc[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
    }
  }
  std::vector<char> used(id, 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    auto& c = cursor[static_cast<std::size_t>(x)];
    const auto& list = inc[static_cast<std::size_t>(x)];
    while (c < list.size() && used[list[c].second]) ++c;
    if (c == list.size()) {
      circuit.push_back(x);
      stack.pop_back();
    } else {
      used[list[c].second] = 1;
      stack.push_back(list[c].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

bool is_valid_tour(const Graph& g, const Tour& t) {
  if (g.n() == 0) return t.walk.empty();
  if (t.walk.empty()) return false;
  if (t.walk.size() == 1) return g.n() == 1 && t.walk[0] == 0;
  if (t.walk.front() != t.walk.back()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < t.walk.size(); ++i) {
    const Vertex v = t.walk[i];
    if (!g.contains_vertex(v)) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.has_edge(t.walk[i - 1], v)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

bool is_hamilton_cycle(const Graph& g, const Tour& t) {
  return g.n() >= 3 && is_valid_tour(g, t) && t.length() == static_cast<std::size_t>(g.n());
}

void shortcut_tour(const Graph& g, Tour& t) {
  if (t.walk.size() < 4) return;
  // Work on the cyclic sequence without the repeated start.
  std::vector<Vertex> cyc(t.walk.begin(), t.walk.end() - 1);
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : cyc) ++count[static_cast<std::size_t>(v)];
  auto cnt = [&](Vertex v) -> int& { return count[static_cast<std::size_t>(v)]; };
  for (bool changed = true; changed && cyc.size() >= 3;) {
    changed = false;
    for (std::size_t i = 0; i < cyc.size() && cyc.size() >= 3;) {
      const std::size_t L = cyc.size();
      const Vertex prev = cyc[(i + L - 1) % L];
      const Vertex cur = cyc[i];
      const Vertex next = cyc[(i + 1) % L];
      if (cnt(cur) > 1 && prev == next && L > 3) {
        // prev cur prev: drop "cur prev".
        const std::size_t j = (i + 1) % L;
        --cnt(cur);
        --cnt(next);
        if (j > i) {
          cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(i), cyc.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        } else {
          cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(i));
          cyc.erase(cyc.begin());
          if (i > 0) --i;
        }
        changed = true;
        continue;
      }
      if (cnt(cur) > 1 && prev != next && g.has_edge(prev, next)) {
        --cnt(cur);
        cyc.erase(cyc.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      ++i;
    }
  }
  // Rotate so the walk starts at its smallest vertex.
  const auto start = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), start, cyc.end());
  cyc.push_back(cyc.front());
  t.walk = std::move(cyc);
}

Tour build_tour(const LinearForest& f, std::size_t close_budget) {
  const Graph& g = f.host();
  if (!is_connected(g)) throw InvalidArgument("build_tour: graph is disconnected");
  Tour tour;
  if (g.n() == 0) return tour;
  if (g.n() == 1) {
    tour.walk = {0};
    return tour;
  }
  if (f.path_count() == 1 && g.n() >= 3 && close_single_path(f, close_budget, tour)) return tour;

  const auto paths = f.paths();
  std::size_t root = 0;
  for (std::size_t k = 1; k < paths.size(); ++k) {
    if (paths[k].size() > paths[root].size()) root = k;
  }
  // BFS over paths; a tree edge joins the first vertex (in path order) that
  // reaches an unvisited path.
  std::vector<std::size_t> path_index(static_cast<std::size_t>(g.n()));
  for (std::size_t k = 0; k < paths.size(); ++k) {
    for (Vertex v : paths[k]) path_index[static_cast<std::size_t>(v)] = k;
  }
  std::vector<Edge> edges = f.edges();
  std::vector<char> reached(paths.size(), 0);
  std::vector<std::size_t> queue{root};
  reached[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex x : paths[queue[head]]) {
      for (Vertex y : g.neighbors(x)) {
        const std::size_t k = path_index[static_cast<std::size_t>(y)];
        if (reached[k]) continue;
        reached[k] = 1;
        edges.emplace_back(x, y);
        queue.push_back(k);
      }
    }
  }
  tour.walk = doubled_circuit(g.n(), edges, paths[root].front());
  shortcut_tour(g, tour);
  return tour;
}

TourReport tour_length_report(const Graph& g, const OptimizerParams& p, std::uint64_t seed) {
  if (!is_connected(g)) throw InvalidArgument("tour_length_report: graph is disconnected");
  const OptimizeResult opt = minimize_forest(greedy_path_cover(g, seed), p);
  TourReport rep;
  rep.paths = opt.forest.path_count();
  rep.tour = build_tour(opt.forest, p.rotation_budget);
  rep.ratio = g.n() == 0 ? 0.0 : static_cast<double>(rep.tour.length()) / static_cast<double>(g.n());
  return rep;
}

}  // namespace linforest
