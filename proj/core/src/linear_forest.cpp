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

#include "linforest/linear_forest.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linforest/rng.hpp"

namespace linforest {

Fingerprint edge_fingerprint(Vertex a, Vertex b) {
  const Edge e(a, b);
  const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
  return {mix64(key ^ 0x243f6a8885a308d3ULL), mix64(key ^ 0x13198a2e03707344ULL)};
}

FixedEndpoints::FixedEndpoints(Vertex n, std::span<const Vertex> vertices) : FixedEndpoints(n) {
  for (Vertex v : vertices) add(v);
}

void FixedEndpoints::add(Vertex v) {
  const auto i = static_cast<std::size_t>(v);
  if (v < 0) throw InvalidArgument("FixedEndpoints: negative vertex");
  if (i >= count_.size()) count_.resize(i + 1, 0);
  if (count_[i] >= 2) throw InvalidArgument("FixedEndpoints: multiplicity above 2");
  ++count_[i];
  ++total_;
}

std::vector<Vertex> FixedEndpoints::to_list() const {
  std::vector<Vertex> out;
  out.reserve(total_);
  for (std::size_t i = 0; i < count_.size(); ++i) {
    for (int k = 0; k < count_[i]; ++k) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

LinearForest::LinearForest(const Graph& host)
    : host_(&host),
      nbr_(static_cast<std::size_t>(host.n()), {kNoVertex, kNoVertex}),
      path_id_(static_cast<std::size_t>(host.n())),
      pos_(static_cast<std::size_t>(host.n()), 0),
      head_(static_cast<std::size_t>(host.n())),
      tail_(static_cast<std::size_t>(host.n())),
      paths_(static_cast<std::size_t>(host.n())) {
  std::iota(path_id_.begin(), path_id_.end(), 0);
  std::iota(head_.begin(), head_.end(), 0);
  std::iota(tail_.begin(), tail_.end(), 0);
}

LinearForest LinearForest::from_edges(const Graph& host, std::span<const Edge> edges) {
  LinearForest f(host);
  // Union-find for the cycle check.
  std::vector<Vertex> parent(static_cast<std::size_t>(host.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : edges) {
    if (!host.has_edge(e.u, e.v)) {
      throw InvalidArgument("forest edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " is not a host edge");
    }
    if (f.degree(e.u) >= 2 || f.degree(e.v) >= 2) {
      throw InvalidArgument("forest degree above 2 at edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v));
    }
    const Vertex ru = find(e.u);
    const Vertex rv = find(e.v);
    if (ru == rv) throw InvalidArgument("forest edges contain a cycle or a repeated edge");
    parent[static_cast<std::size_t>(ru)] = rv;
    f.add_edge_raw(e.u, e.v);
  }
  // Lay out paths from their smaller end, ids in order of discovery.
  std::vector<char> done(static_cast<std::size_t>(host.n()), 0);
  int next_id = 0;
  for (Vertex v = 0; v < host.n(); ++v) {
    if (done[static_cast<std::size_t>(v)] || f.degree(v) == 2) continue;
    f.relayout(v, next_id);
    Vertex prev = kNoVertex;
    for (Vertex x = v; x != kNoVertex;) {
      done[static_cast<std::size_t>(x)] = 1;
      const auto& nb = f.nbr_[static_cast<std::size_t>(x)];
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = x;
      x = next == prev ? kNoVertex : next;
    }
    ++next_id;
  }
  f.paths_ = static_cast<std::size_t>(next_id);
  f.free_ids_.clear();
  for (int id = host.n() - 1; id >= next_id; --id) {
    f.head_[static_cast<std::size_t>(id)] = kNoVertex;
    f.tail_[static_cast<std::size_t>(id)] = kNoVertex;
    f.free_ids_.push_back(id);
  }
  return f;
}

int LinearForest::degree(Vertex v) const {
  const auto& nb = nbr_[static_cast<std::size_t>(v)];
  return (nb[0] != kNoVertex) + (nb[1] != kNoVertex);
}

bool LinearForest::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n() || b < 0 || b >= n()) return false;
  const auto& nb = nbr_[static_cast<std::size_t>(a)];
  return b != kNoVertex && (nb[0] == b || nb[1] == b);
}

std::vector<Vertex> LinearForest::end_multiset() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n(); ++v) {
    for (int k = 0; k < endpoint_multiplicity(v); ++k) out.push_back(v);
  }
  return out;
}

Vertex LinearForest::other_end(Vertex endpoint) const {
  const auto id = static_cast<std::size_t>(path_of(endpoint));
  return head_[id] == endpoint ? tail_[id] : head_[id];
}

std::vector<Edge> LinearForest::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex v = 0; v < n(); ++v) {
    for (Vertex w : nbr_[static_cast<std::size_t>(v)]) {
      if (w != kNoVertex && v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> LinearForest::paths() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(paths_);
  for (std::size_t id = 0; id < head_.size(); ++id) {
    if (head_[id] == kNoVertex) continue;
    std::vector<Vertex> path(static_cast<std::size_t>(pos_[static_cast<std::size_t>(tail_[id])]) + 1);
    // Collect by position.
    Vertex prev = kNoVertex;
    Vertex cur = head_[id];
    for (std::size_t i = 0; i < path.size(); ++i) {
      path[i] = cur;
      const auto& nb = nbr_[static_cast<std::size_t>(cur)];
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    out.push_back(std::move(path));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void LinearForest::add_edge_raw(Vertex a, Vertex b) {
  auto& na = nbr_[static_cast<std::size_t>(a)];
  auto& nb = nbr_[static_cast<std::size_t>(b)];
  (na[0] == kNoVertex ? na[0] : na[1]) = b;
  (nb[0] == kNoVertex ? nb[0] : nb[1]) = a;
  fingerprint_ ^= edge_fingerprint(a, b);
}

void LinearForest::remove_edge_raw(Vertex a, Vertex b) {
  auto drop = [](std::array<Vertex, 2>& slots, Vertex x) {
    if (slots[0] == x) {
      slots[0] = slots[1];
      slots[1] = kNoVertex;
    } else if (slots[1] == x) {
      slots[1] = kNoVertex;
    }
  };
  drop(nbr_[static_cast<std::size_t>(a)], b);
  drop(nbr_[static_cast<std::size_t>(b)], a);
  fingerprint_ ^= edge_fingerprint(a, b);
}

void LinearForest::relayout(Vertex start, int id) {
  // Walk to one end, then number the path from there.
  Vertex prev = kNoVertex;
  Vertex cur = start;
  while (true) {
    const auto& nb = nbr_[static_cast<std::size_t>(cur)];
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == kNoVertex || next == prev) break;
    prev = cur;
    cur = next;
  }
  const auto slot = static_cast<std::size_t>(id);
  head_[slot] = cur;
  prev = kNoVertex;
  int p = 0;
  while (true) {
    path_id_[static_cast<std::size_t>(cur)] = id;
    pos_[static_cast<std::size_t>(cur)] = p++;
    const auto& nb = nbr_[static_cast<std::size_t>(cur)];
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    if (next == kNoVertex || next == prev) break;
    prev = cur;
    cur = next;
  }
  tail_[slot] = cur;
}

std::optional<std::string> LinearForest::rotation_error(const RotationMove& mv) const {
  const Vertex v = mv.old_endpoint;
  const Vertex u = mv.pivot;
  const Vertex w = mv.new_endpoint;
  if (v < 0 || v >= n() || u < 0 || u >= n() || w < 0 || w >= n()) return "vertex out of range";
  if (!is_endpoint(v)) return "old endpoint " + std::to_string(v) + " is not an endpoint";
  if (u == v || !host_->has_edge(u, v)) return "pivot is not a graph neighbour of the old endpoint";
  if (has_edge(u, v)) {
    if (w == v) return std::nullopt;  // remove uv, add uv
    return "pivot-old endpoint edge already in the forest";
  }
  if (!has_edge(u, w)) return "new endpoint is not a path-neighbour of the pivot";
  if (same_path(u, v)) {
    const int du = position(u);
    if ((position(w) - du > 0) != (position(v) - du > 0)) {
      return "new endpoint must be the pivot's neighbour closer to the old endpoint";
    }
  }
  return std::nullopt;
}

void LinearForest::rotate(const RotationMove& mv) {
  if (auto err = rotation_error(mv)) throw InvalidArgument("rotate: " + *err);
  if (mv.new_endpoint == mv.old_endpoint) return;
  rotate_unchecked(mv);
}

void LinearForest::rotate_unchecked(const RotationMove& mv) {
  const Vertex v = mv.old_endpoint;
  const Vertex u = mv.pivot;
  const Vertex w = mv.new_endpoint;
  const int pv = path_of(v);
  const int pu = path_of(u);
  remove_edge_raw(u, w);
  add_edge_raw(u, v);
  relayout(v, pv);
  if (pv != pu) relayout(w, pu);
}

void LinearForest::merge(Vertex a, Vertex b) {
  if (a < 0 || a >= n() || b < 0 || b >= n()) throw InvalidArgument("merge: vertex out of range");
  if (a == b) throw InvalidArgument("merge: loop");
  if (!is_endpoint(a) || !is_endpoint(b)) throw InvalidArgument("merge: both vertices must be endpoints");
  if (same_path(a, b)) throw InvalidArgument("merge: endpoints on the same path would close a cycle");
  if (!host_->has_edge(a, b)) throw InvalidArgument("merge: not a graph edge");
  const int pa = path_of(a);
  const int pb = path_of(b);
  add_edge_raw(a, b);
  relayout(a, pa);
  head_[static_cast<std::size_t>(pb)] = kNoVertex;
  tail_[static_cast<std::size_t>(pb)] = kNoVertex;
  free_ids_.push_back(pb);
  --paths_;
}

LinearForest trivial_forest(const Graph& g) { return LinearForest(g); }

LinearForest greedy_path_cover(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span<Vertex>(order));
  std::vector<char> covered(n, 0);
  std::vector<Edge> edges;
  std::vector<Vertex> candidates;
  auto extend = [&](Vertex end) {
    while (true) {
      candidates.clear();
      for (Vertex y : g.neighbors(end)) {
        if (!covered[static_cast<std::size_t>(y)]) candidates.push_back(y);
      }
      if (candidates.empty()) return;
      const Vertex next = candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
      covered[static_cast<std::size_t>(next)] = 1;
      edges.emplace_back(end, next);
      end = next;
    }
  };
  for (Vertex s : order) {
    if (covered[static_cast<std::size_t>(s)]) continue;
    covered[static_cast<std::size_t>(s)] = 1;
    extend(s);
    extend(s);  // the start is still a path end
  }
  return LinearForest::from_edges(g, edges);
}

LinearForest apply_rotation(const LinearForest& f, const RotationMove& mv) {
  LinearForest out = f;
  out.rotate(mv);
  return out;
}

void enumerate_rotations_into(const LinearForest& f, const FixedEndpoints& x,
                              std::vector<RotationMove>& out) {
  out.clear();
  const Graph& g = f.host();
  for (Vertex v = 0; v < f.n(); ++v) {
    if (f.endpoint_multiplicity(v) <= x.count(v)) continue;
    for (Vertex u : g.neighbors(v)) {
      if (f.has_edge(u, v)) continue;
      const auto& nb = f.forest_neighbors(u);
      if (f.same_path(u, v)) {
        const int du = f.position(u);
        const bool toward_higher = f.position(v) > du;
        for (Vertex w : nb) {
          if (w != kNoVertex && (f.position(w) > du) == toward_higher) out.push_back({v, u, w});
        }
      } else {
        Vertex a = nb[0];
        Vertex b = nb[1];
        if (a != kNoVertex && b != kNoVertex && b < a) std::swap(a, b);
        if (a != kNoVertex) out.push_back({v, u, a});
        if (b != kNoVertex) out.push_back({v, u, b});
      }
    }
  }
}

std::vector<RotationMove> enumerate_rotations(const LinearForest& f, const FixedEndpoints& x) {
  std::vector<RotationMove> out;
  enumerate_rotations_into(f, x, out);
  return out;
}

LinearForest merge_paths(const LinearForest& f, Vertex u, Vertex v) {
  LinearForest out = f;
  out.merge(u, v);
  return out;
}

LinearForest restrict_forest(const LinearForest& f, const Graph& original) {
  if (original.n() > f.n()) throw InvalidArgument("restrict_forest: original larger than host");
  std::vector<Edge> kept;
  for (const Edge& e : f.edges()) {
    if (e.v < original.n() && original.has_edge(e.u, e.v)) kept.push_back(e);
  }
  return LinearForest::from_edges(original, kept);
}

std::string format_forest(const LinearForest& f) {
  std::ostringstream out;
  for (const auto& path : f.paths()) {
    out << "path";
    for (Vertex v : path) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

LinearForest parse_forest(const Graph& host, std::string_view text) {
  std::vector<Edge> edges;
  std::vector<char> seen(static_cast<std::size_t>(host.n()), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string tag;
    if (!(words >> tag)) continue;
    const std::string where = "forest line " + std::to_string(line_no) + ": ";
    if (tag != "path") throw ParseError(where + "expected \"path\"");
    long long v = 0;
    Vertex prev = kNoVertex;
    bool any = false;
    while (words >> v) {
      if (v < 0 || v >= host.n()) throw ParseError(where + "vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw ParseError(where + "vertex listed twice");
      seen[static_cast<std::size_t>(v)] = 1;
      if (prev != kNoVertex) edges.emplace_back(prev, static_cast<Vertex>(v));
      prev = static_cast<Vertex>(v);
      any = true;
    }
    if (!words.eof()) throw ParseError(where + "malformed vertex label");
    if (!any) throw ParseError(where + "empty path");
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ParseError("forest: not every vertex is covered");
  }
  try {
    return LinearForest::from_edges(host, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("forest: ") + e.what());
  }
}

}  // namespace linforest
