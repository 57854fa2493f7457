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

#include "linforest/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace linforest {

Graph::Graph(Vertex n) {
  if (n < 0) throw InvalidArgument("Graph: negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (!contains_vertex(e.u) || !contains_vertex(e.v)) {
      throw InvalidArgument("Graph: edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidArgument("Graph: loop edge at " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("Graph: parallel edge");
    }
  }
  m_ = edges.size();
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = static_cast<int>(adj_.front().size());
  for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::is_regular(int r) const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [r](const auto& list) { return static_cast<int>(list.size()) == r; });
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains_vertex(a) || !contains_vertex(b)) return false;
  const auto& list = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Next non-blank line, or nullopt at end of input.
  std::optional<std::string_view> next() {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return line;
    }
    return std::nullopt;
  }
};

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    return i;
  };
  std::size_t i = skip(0);
  auto r1 = std::from_chars(line.data() + i, line.data() + line.size(), a);
  if (r1.ec != std::errc() || r1.ptr == line.data() + i) return false;
  i = static_cast<std::size_t>(r1.ptr - line.data());
  std::size_t j = skip(i);
  if (j == i) return false;
  auto r2 = std::from_chars(line.data() + j, line.data() + line.size(), b);
  if (r2.ec != std::errc() || r2.ptr == line.data() + j) return false;
  std::size_t k = skip(static_cast<std::size_t>(r2.ptr - line.data()));
  return k == line.size() && a >= 0 && b >= 0;
}

}  // namespace

Graph load_graph(std::string_view text) {
  LineReader reader{text};
  auto header = reader.next();
  if (!header) throw ParseError("edge list: missing \"n m\" header");
  long long n = 0;
  long long m = 0;
  if (!parse_pair(*header, n, m)) {
    throw ParseError("edge list line " + std::to_string(reader.line_no) + ": expected \"n m\"");
  }
  if (n > (1LL << 30)) throw ParseError("edge list: vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<Edge> seen;
  for (long long i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    long long a = 0;
    long long b = 0;
    const std::string where = "edge list line " + std::to_string(reader.line_no) + ": ";
    if (!parse_pair(*line, a, b)) throw ParseError(where + "expected \"u v\"");
    if (a >= n || b >= n) throw ParseError(where + "vertex out of range");
    if (a == b) throw ParseError(where + "loop edge");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (reader.next()) throw ParseError("edge list: trailing content after " + std::to_string(m) + " edges");

  seen = edges;
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    throw ParseError("edge list: duplicate edge " + std::to_string(dup->u) + " " +
                     std::to_string(dup->v));
  }
  return Graph(static_cast<Vertex>(n), edges);
}

std::string save_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::size_t connected_components(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return connected_components(g) <= 1; }

Bipartition bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> side(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<int> depth(n, 0);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        auto yi = static_cast<std::size_t>(y);
        auto xi = static_cast<std::size_t>(x);
        if (side[yi] == -1) {
          side[yi] = 1 - side[xi];
          parent[yi] = x;
          depth[yi] = depth[xi] + 1;
          queue.push_back(y);
        } else if (side[yi] == side[xi]) {
          // Walk both tree paths up to the common ancestor.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();  // common ancestor already in `left`
          Bipartition result;
          result.odd_cycle = left;
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          // Rotate so the cycle starts at its smallest vertex.
          auto it = std::min_element(result.odd_cycle.begin(), result.odd_cycle.end());
          std::rotate(result.odd_cycle.begin(), it, result.odd_cycle.end());
          if (result.odd_cycle[1] > result.odd_cycle.back()) {
            std::reverse(result.odd_cycle.begin() + 1, result.odd_cycle.end());
          }
          return result;
        }
      }
    }
  }
  Bipartition result;
  result.side = std::move(side);
  return result;
}

}  // namespace linforest
