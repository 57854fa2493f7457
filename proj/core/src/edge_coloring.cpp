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

#include "linforest/edge_coloring.hpp"

#include <algorithm>
#include <unordered_map>

namespace linforest {

namespace {

class Palette {
 public:
  Palette(Vertex n, int colors)
      : colors_(colors), at_(static_cast<std::size_t>(n) * static_cast<std::size_t>(colors), kNoVertex) {}

  Vertex& at(Vertex v, int c) {
    return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(c)];
  }
  bool is_free(Vertex v, int c) { return at(v, c) == kNoVertex; }
  int free_color(Vertex v) {
    for (int c = 0; c < colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw InternalError("vizing_color: no free color");
  }
  int color_of(Vertex a, Vertex b) const {
    const auto it = color_.find(key(a, b));
    return it == color_.end() ? -1 : it->second;
  }
  void set(Vertex a, Vertex b, int c) {
    at(a, c) = b;
    at(b, c) = a;
    color_[key(a, b)] = c;
  }
  void clear(Vertex a, Vertex b) {
    const auto it = color_.find(key(a, b));
    if (it == color_.end()) return;
    at(a, it->second) = kNoVertex;
    at(b, it->second) = kNoVertex;
    color_.erase(it);
  }

 private:
  static std::uint64_t key(Vertex a, Vertex b) {
    const Edge e(a, b);
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
  }

  int colors_;
  std::vector<Vertex> at_;
  std::unordered_map<std::uint64_t, int> color_;
};

}  // namespace

std::vector<std::vector<Edge>> EdgeColoring::classes() const {
  std::vector<std::vector<Edge>> out(static_cast<std::size_t>(num_colors));
  for (std::size_t i = 0; i < edges.size(); ++i) out[static_cast<std::size_t>(color[i])].push_back(edges[i]);
  for (auto& cls : out) std::sort(cls.begin(), cls.end());
  return out;
}

EdgeColoring vizing_color(const Graph& g) {
  EdgeColoring out;
  out.edges = g.edges();
  if (out.edges.empty()) return out;
  const int palette_size = g.max_degree() + 1;
  Palette pal(g.n(), palette_size);
  std::vector<Vertex> fan;
  std::vector<std::pair<Vertex, Vertex>> chain;
  for (const Edge& e : out.edges) {
    const Vertex u = e.u;
    // Maximal fan of u starting at v: each next edge's color is free on the
    // previous fan vertex.
    fan.assign(1, e.v);
    for (bool grown = true; grown;) {
      grown = false;
      for (Vertex y : g.neighbors(u)) {
        const int cy = pal.color_of(u, y);
        if (cy < 0 || std::find(fan.begin(), fan.end(), y) != fan.end()) continue;
        if (pal.is_free(fan.back(), cy)) {
          fan.push_back(y);
          grown = true;
          break;
        }
      }
    }
    const int c = pal.free_color(u);
    const int d = pal.free_color(fan.back());
    // Invert the cd-path through u; c is free at u so it starts with d.
    chain.clear();
    for (Vertex x = u, want = d; pal.at(x, want) != kNoVertex;) {
      const Vertex y = pal.at(x, want);
      chain.emplace_back(x, y);
      x = y;
      want = want == d ? c : d;
      if (chain.size() > out.edges.size()) throw InternalError("vizing_color: cd-path does not end");
    }
    std::vector<int> chain_colors;
    for (const auto& [a, b] : chain) chain_colors.push_back(pal.color_of(a, b));
    for (const auto& [a, b] : chain) pal.clear(a, b);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      pal.set(chain[i].first, chain[i].second, chain_colors[i] == c ? d : c);
    }
    // Shortest fan prefix ending at a vertex where d is free.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = pal.color_of(u, fan[i]);
        if (ci < 0 || !pal.is_free(fan[i - 1], ci)) break;
      }
      if (pal.is_free(fan[i], d)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw InternalError("vizing_color: no fan vertex with the inverted color free");
    for (std::size_t i = 0; i < w; ++i) {
      const int next = pal.color_of(u, fan[i + 1]);
      pal.clear(u, fan[i + 1]);
      pal.set(u, fan[i], next);
    }
    pal.set(u, fan[w], d);
  }
  // Renumber the used colors densely, keeping their order.
  std::vector<int> raw;
  raw.reserve(out.edges.size());
  for (const Edge& e : out.edges) raw.push_back(pal.color_of(e.u, e.v));
  std::vector<int> used = raw;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  out.num_colors = static_cast<int>(used.size());
  for (int r : raw) {
    out.color.push_back(static_cast<int>(std::lower_bound(used.begin(), used.end(), r) - used.begin()));
  }
  return out;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.edges != g.edges() || c.color.size() != c.edges.size()) return false;
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const int col = c.color[i];
    if (col < 0 || col >= c.num_colors) return false;
    for (Vertex x : {c.edges[i].u, c.edges[i].v}) {
      auto& s = seen[static_cast<std::size_t>(x)];
      if (std::find(s.begin(), s.end(), col) != s.end()) return false;
      s.push_back(col);
    }
  }
  return true;
}

}  // namespace linforest
