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

#include "linforest/regularize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace linforest {

std::optional<std::vector<Edge>> havel_hakimi(std::span<const int> degrees, Vertex offset) {
  const std::size_t k = degrees.size();
  std::vector<int> residual(degrees.begin(), degrees.end());
  std::vector<std::size_t> order(k);
  std::vector<Edge> edges;
  long long total = std::accumulate(residual.begin(), residual.end(), 0LL);
  if (total % 2 != 0) return std::nullopt;
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return residual[a] > residual[b]; });
    if (k == 0 || residual[order[0]] == 0) break;
    const std::size_t top = order[0];
    const int need = residual[top];
    if (need < 0 || static_cast<std::size_t>(need) > k - 1) return std::nullopt;
    residual[top] = 0;
    for (int i = 1; i <= need; ++i) {
      const std::size_t other = order[static_cast<std::size_t>(i)];
      if (residual[other] <= 0) return std::nullopt;
      --residual[other];
      edges.emplace_back(offset + static_cast<Vertex>(top), offset + static_cast<Vertex>(other));
    }
  }
  return edges;
}

namespace {

class WorkingGraph {
 public:
  explicit WorkingGraph(const Graph& g) : base_(g), extra_(static_cast<std::size_t>(g.n())) {}

  bool adjacent(Vertex a, Vertex b) const {
    if (base_.has_edge(a, b)) return true;
    const auto& list = extra_[static_cast<std::size_t>(a)];
    return std::find(list.begin(), list.end(), b) != list.end();
  }
  void add(Vertex a, Vertex b) {
    extra_[static_cast<std::size_t>(a)].push_back(b);
    extra_[static_cast<std::size_t>(b)].push_back(a);
    added_.emplace_back(a, b);
  }
  const std::vector<Edge>& added() const { return added_; }

 private:
  const Graph& base_;
  std::vector<std::vector<Vertex>> extra_;
  std::vector<Edge> added_;
};

// Attaches deficient originals to q auxiliary vertices and closes the
// auxiliaries with Havel–Hakimi. Returns the added edges on success.
std::optional<std::vector<Edge>> attach_auxiliaries(const std::vector<std::pair<Vertex, int>>& deficient,
                                                    Vertex n, int q, int r) {
  std::vector<int> load(static_cast<std::size_t>(q), 0);
  std::vector<Edge> edges;
  std::vector<std::size_t> order(static_cast<std::size_t>(q));
  for (const auto& [v, def] : deficient) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return load[a] < load[b]; });
    if (static_cast<std::size_t>(def) > order.size()) return std::nullopt;
    for (int i = 0; i < def; ++i) {
      const std::size_t a = order[static_cast<std::size_t>(i)];
      if (load[a] >= r) return std::nullopt;
      ++load[a];
      edges.emplace_back(v, n + static_cast<Vertex>(a));
    }
  }
  std::vector<int> residual(static_cast<std::size_t>(q));
  for (std::size_t a = 0; a < residual.size(); ++a) residual[a] = r - load[a];
  auto inner = havel_hakimi(residual, n);
  if (!inner) return std::nullopt;
  edges.insert(edges.end(), inner->begin(), inner->end());
  return edges;
}

}  // namespace

EmbeddingMap regularize(const Graph& g, int r) {
  if (r < 0) throw InvalidArgument("regularize: negative target degree");
  if (g.max_degree() > r) {
    throw InvalidArgument("regularize: max degree " + std::to_string(g.max_degree()) +
                          " exceeds target " + std::to_string(r));
  }
  const Vertex n = g.n();
  std::vector<int> def(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) def[static_cast<std::size_t>(v)] = r - g.degree(v);

  WorkingGraph work(g);
  std::vector<Vertex> active;
  for (Vertex v = 0; v < n; ++v) {
    if (def[static_cast<std::size_t>(v)] > 0) active.push_back(v);
  }
  auto more_deficient = [&](Vertex a, Vertex b) {
    const int da = def[static_cast<std::size_t>(a)];
    const int db = def[static_cast<std::size_t>(b)];
    return da != db ? da > db : a < b;
  };
  // Phase 1: edges between deficient originals.
  while (!active.empty()) {
    auto vit = std::min_element(active.begin(), active.end(), more_deficient);
    const Vertex v = *vit;
    Vertex partner = kNoVertex;
    for (Vertex u : active) {
      if (u == v || work.adjacent(u, v)) continue;
      if (partner == kNoVertex || more_deficient(u, partner)) partner = u;
    }
    if (partner == kNoVertex) {
      // Deficiencies only shrink, so v never gains a partner later.
      active.erase(vit);
      continue;
    }
    work.add(v, partner);
    --def[static_cast<std::size_t>(v)];
    --def[static_cast<std::size_t>(partner)];
    std::erase_if(active, [&](Vertex x) { return def[static_cast<std::size_t>(x)] == 0; });
  }

  std::vector<std::pair<Vertex, int>> deficient;
  int max_def = 0;
  long long total_def = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int d = def[static_cast<std::size_t>(v)];
    if (d > 0) {
      deficient.emplace_back(v, d);
      max_def = std::max(max_def, d);
      total_def += d;
    }
  }
  std::stable_sort(deficient.begin(), deficient.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), work.added().begin(), work.added().end());
  EmbeddingMap map;
  map.original_n = n;
  map.added_original_edges = work.added().size();
  if (total_def == 0) {
    map.host = Graph(n, edges);
    return map;
  }

  // Phase 2: auxiliary vertices.
  const long long q_limit = total_def + 2LL * r + 4;
  for (int q = std::max(max_def, 1); q <= q_limit; ++q) {
    if (r % 2 == 1 && (static_cast<long long>(n) + q) % 2 != 0) continue;
    auto aux = attach_auxiliaries(deficient, n, q, r);
    if (!aux) continue;
    edges.insert(edges.end(), aux->begin(), aux->end());
    map.host = Graph(n + q, edges);
    if (!map.host.is_regular(r)) throw InternalError("regularize: host not regular");
    return map;
  }
  throw InternalError("regularize: auxiliary-vertex search exhausted");
}

bool is_regular_embedding(const Graph& g, const EmbeddingMap& map, int r) {
  if (map.original_n != g.n() || map.host.n() < g.n()) return false;
  if (!map.host.is_regular(r)) return false;
  for (const Edge& e : g.edges()) {
    if (!map.host.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace linforest
