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

#include "linforest/rotation_component.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace linforest {

namespace {

// Lazy generator reproducing enumerate_rotations order. It holds only
// indices, so it stays valid across a rotate/undo pair on the same forest.
struct MoveCursor {
  Vertex v = 0;
  std::size_t ui = 0;
  std::size_t wi = 0;

  bool next(const LinearForest& f, const FixedEndpoints& x, RotationMove& out) {
    const Graph& g = f.host();
    while (v < f.n()) {
      if (f.endpoint_multiplicity(v) <= x.count(v)) {
        advance_v();
        continue;
      }
      const auto nbrs = g.neighbors(v);
      if (ui >= nbrs.size()) {
        advance_v();
        continue;
      }
      const Vertex u = nbrs[ui];
      std::array<Vertex, 2> ws{kNoVertex, kNoVertex};
      std::size_t count = 0;
      if (!f.has_edge(u, v)) {
        const auto& nb = f.forest_neighbors(u);
        if (f.same_path(u, v)) {
          const int du = f.position(u);
          const bool toward_higher = f.position(v) > du;
          for (Vertex w : nb) {
            if (w != kNoVertex && (f.position(w) > du) == toward_higher) ws[count++] = w;
          }
        } else {
          for (Vertex w : nb) {
            if (w != kNoVertex) ws[count++] = w;
          }
          if (count == 2 && ws[1] < ws[0]) std::swap(ws[0], ws[1]);
        }
      }
      if (wi >= count) {
        ++ui;
        wi = 0;
        continue;
      }
      out = {v, u, ws[wi++]};
      return true;
    }
    return false;
  }

  void advance_v() {
    ++v;
    ui = 0;
    wi = 0;
  }
};

RotationMove inverse(const RotationMove& mv) { return {mv.new_endpoint, mv.pivot, mv.old_endpoint}; }

Fingerprint fingerprint_after(const LinearForest& f, const RotationMove& mv) {
  Fingerprint fp = f.fingerprint();
  fp ^= edge_fingerprint(mv.pivot, mv.new_endpoint);
  fp ^= edge_fingerprint(mv.pivot, mv.old_endpoint);
  return fp;
}

bool rotatable_after(const LinearForest& f, const FixedEndpoints& x, const RotationMove& mv) {
  return f.endpoint_multiplicity(mv.new_endpoint) + 1 > x.count(mv.new_endpoint);
}

ExploreResult explore_depth_first(const LinearForest& start, const FixedEndpoints& x,
                                  const ExploreOptions& opt, const StateVisitor& visit) {
  ExploreResult res;
  res.tree.nodes.push_back({});
  res.states = 1;
  if (visit && visit(start, 0, nullptr)) {
    res.stopped = true;
    return res;
  }
  if (opt.max_states == 0) return res;

  LinearForest cur = start;
  std::unordered_set<Fingerprint, FingerprintHash> visited;
  std::vector<char> seen_endpoint(static_cast<std::size_t>(start.n()), 0);
  if (!opt.novelty_only) {
    visited.insert(cur.fingerprint());
  } else {
    for (Vertex v = 0; v < cur.n(); ++v) {
      if (cur.endpoint_multiplicity(v) > x.count(v)) seen_endpoint[static_cast<std::size_t>(v)] = 1;
    }
  }

  struct Frame {
    std::uint32_t node;
    MoveCursor cursor;
  };
  std::vector<Frame> stack{{0, {}}};
  RotationMove mv;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (!top.cursor.next(cur, x, mv)) {
      const std::uint32_t node = top.node;
      stack.pop_back();
      if (!stack.empty()) cur.rotate_unchecked(inverse(res.tree.nodes[node].move));
      continue;
    }
    if (opt.novelty_only) {
      const auto w = static_cast<std::size_t>(mv.new_endpoint);
      if (seen_endpoint[w] || !rotatable_after(cur, x, mv)) continue;
    } else if (visited.count(fingerprint_after(cur, mv)) != 0) {
      continue;
    }
    if (res.states >= opt.max_states) return res;  // truncated: complete stays false
    if (opt.novelty_only) {
      seen_endpoint[static_cast<std::size_t>(mv.new_endpoint)] = 1;
    }
    const std::uint32_t parent = top.node;
    cur.rotate_unchecked(mv);
    if (!opt.novelty_only) visited.insert(cur.fingerprint());
    const auto node = static_cast<std::uint32_t>(res.tree.nodes.size());
    res.tree.nodes.push_back({parent, mv});
    ++res.states;
    if (visit && visit(cur, node, &res.tree.nodes.back().move)) {
      res.stopped = true;
      res.stop_node = node;
      return res;
    }
    stack.push_back({node, {}});
  }
  res.complete = true;
  return res;
}

ExploreResult explore_breadth_first(const LinearForest& start, const FixedEndpoints& x,
                                    const ExploreOptions& opt, const StateVisitor& visit) {
  ExploreResult res;
  res.tree.nodes.push_back({});
  res.states = 1;
  if (visit && visit(start, 0, nullptr)) {
    res.stopped = true;
    return res;
  }
  if (opt.max_states == 0) return res;

  // Fingerprint -> nodes with that fingerprint; edge sets kept per node only
  // when collisions are verified.
  std::unordered_map<Fingerprint, std::vector<std::uint32_t>, FingerprintHash> index;
  std::vector<std::vector<Edge>> edge_sets;
  std::vector<char> seen_endpoint(static_cast<std::size_t>(start.n()), 0);
  auto remember = [&](const LinearForest& f, std::uint32_t node) {
    index[f.fingerprint()].push_back(node);
    if (opt.verify_collisions) edge_sets.push_back(f.edges());
  };
  auto known = [&](const LinearForest& f) {
    const auto it = index.find(f.fingerprint());
    if (it == index.end()) return false;
    if (!opt.verify_collisions) return true;
    const std::vector<Edge> edges = f.edges();
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](std::uint32_t k) { return edge_sets[k] == edges; });
  };
  if (opt.novelty_only) {
    for (Vertex v = 0; v < start.n(); ++v) {
      if (start.endpoint_multiplicity(v) > x.count(v)) seen_endpoint[static_cast<std::size_t>(v)] = 1;
    }
  }
  remember(start, 0);

  std::deque<std::pair<LinearForest, std::uint32_t>> queue;
  queue.emplace_back(start, 0);
  std::vector<RotationMove> moves;
  while (!queue.empty()) {
    auto [state, node] = std::move(queue.front());
    queue.pop_front();
    enumerate_rotations_into(state, x, moves);
    for (const RotationMove& mv : moves) {
      if (opt.novelty_only) {
        const auto w = static_cast<std::size_t>(mv.new_endpoint);
        if (seen_endpoint[w] || !rotatable_after(state, x, mv)) continue;
      }
      LinearForest child = state;
      child.rotate_unchecked(mv);
      if (!opt.novelty_only && known(child)) continue;
      if (res.states >= opt.max_states) return res;
      if (opt.novelty_only) seen_endpoint[static_cast<std::size_t>(mv.new_endpoint)] = 1;
      const auto child_node = static_cast<std::uint32_t>(res.tree.nodes.size());
      res.tree.nodes.push_back({node, mv});
      ++res.states;
      if (!opt.novelty_only) remember(child, child_node);
      if (visit && visit(child, child_node, &res.tree.nodes.back().move)) {
        res.stopped = true;
        res.stop_node = child_node;
        return res;
      }
      queue.emplace_back(std::move(child), child_node);
    }
  }
  res.complete = true;
  return res;
}

// Shared collection of C from a search: the root's rotatable endpoints, then
// every new endpoint that is rotatable where it appears.
struct Collector {
  const FixedEndpoints* x;
  std::vector<std::uint32_t>* witness;
  std::uint32_t offset = 0;

  bool operator()(const LinearForest& f, std::uint32_t node, const RotationMove* last) const {
    auto& wit = *witness;
    if (last == nullptr) {
      for (Vertex v = 0; v < f.n(); ++v) {
        if (f.endpoint_multiplicity(v) > x->count(v) && wit[static_cast<std::size_t>(v)] == SearchTree::kNoNode) {
          wit[static_cast<std::size_t>(v)] = 0;
        }
      }
      return false;
    }
    const Vertex w = last->new_endpoint;
    if (f.endpoint_multiplicity(w) > x->count(w) && wit[static_cast<std::size_t>(w)] == SearchTree::kNoNode) {
      wit[static_cast<std::size_t>(w)] = node + offset;
    }
    return false;
  }
};

void finish_component(RotationComponent& comp) {
  comp.component.clear();
  for (std::size_t v = 0; v < comp.witness_node.size(); ++v) {
    if (comp.witness_node[v] != SearchTree::kNoNode) comp.component.push_back(static_cast<Vertex>(v));
  }
}

}  // namespace

std::vector<RotationMove> SearchTree::moves_to(std::uint32_t node) const {
  std::vector<RotationMove> out;
  while (node != 0 && node != kNoNode) {
    out.push_back(nodes[node].move);
    node = nodes[node].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void require_fixed_subset(const LinearForest& f, const FixedEndpoints& x) {
  for (Vertex v : x.to_list()) {
    if (v >= f.n() || x.count(v) > f.endpoint_multiplicity(v)) {
      throw InvalidArgument("fixed endpoint " + std::to_string(v) + " exceeds its multiplicity in End(F)");
    }
  }
}

ExploreResult explore_rotations(const LinearForest& start, const FixedEndpoints& x,
                                const ExploreOptions& options, const StateVisitor& visit) {
  require_fixed_subset(start, x);
  return options.order == ExploreOrder::kBreadthFirst ? explore_breadth_first(start, x, options, visit)
                                                      : explore_depth_first(start, x, options, visit);
}

bool RotationComponent::contains(Vertex v) const {
  return v >= 0 && static_cast<std::size_t>(v) < witness_node.size() &&
         witness_node[static_cast<std::size_t>(v)] != SearchTree::kNoNode;
}

std::vector<RotationMove> RotationComponent::witness(Vertex v) const {
  if (!contains(v)) throw InvalidArgument("vertex " + std::to_string(v) + " is not in the component");
  return tree.moves_to(witness_node[static_cast<std::size_t>(v)]);
}

RotationComponent component_exact(const LinearForest& f, const FixedEndpoints& x, std::size_t max_states) {
  RotationComponent comp;
  comp.witness_node.assign(static_cast<std::size_t>(f.n()), SearchTree::kNoNode);
  ExploreOptions opt;
  opt.order = ExploreOrder::kBreadthFirst;
  opt.max_states = max_states;
  opt.verify_collisions = true;
  ExploreResult res = explore_rotations(f, x, opt, Collector{&x, &comp.witness_node});
  comp.tree = std::move(res.tree);
  comp.states_explored = res.states;
  comp.exact = res.complete;
  comp.budget_exhausted = !res.complete;
  finish_component(comp);
  return comp;
}

RotationComponent component_greedy(const LinearForest& f, const FixedEndpoints& x, std::size_t max_states) {
  RotationComponent comp;
  comp.witness_node.assign(static_cast<std::size_t>(f.n()), SearchTree::kNoNode);

  ExploreOptions discover;
  discover.order = ExploreOrder::kDepthFirst;
  discover.max_states = max_states;
  discover.novelty_only = true;
  ExploreResult first = explore_rotations(f, x, discover, Collector{&x, &comp.witness_node});

  // The second pass shares the root (node 0); its other nodes are appended.
  const auto offset = static_cast<std::uint32_t>(first.tree.nodes.size() - 1);
  ExploreOptions full;
  full.order = ExploreOrder::kDepthFirst;
  full.max_states = max_states;
  ExploreResult second = explore_rotations(f, x, full, Collector{&x, &comp.witness_node, offset});

  comp.tree = std::move(first.tree);
  comp.tree.nodes.reserve(comp.tree.nodes.size() + second.tree.nodes.size() - 1);
  for (std::size_t k = 1; k < second.tree.nodes.size(); ++k) {
    SearchTree::Node node = second.tree.nodes[k];
    if (node.parent != 0) node.parent += offset;
    comp.tree.nodes.push_back(node);
  }
  comp.states_explored = first.states + second.states - 1;
  comp.exact = false;
  comp.budget_exhausted = !second.complete;
  finish_component(comp);
  return comp;
}

void classify_boundary(const LinearForest& f, RotationComponent& comp) {
  const Graph& g = f.host();
  const auto n = static_cast<std::size_t>(f.n());
  std::vector<char> in_c(n, 0);
  std::vector<char> in_b(n, 0);
  for (Vertex v : comp.component) in_c[static_cast<std::size_t>(v)] = 1;
  comp.boundary.clear();
  for (Vertex v : comp.component) {
    for (Vertex y : g.neighbors(v)) {
      const auto i = static_cast<std::size_t>(y);
      if (!in_c[i] && !in_b[i]) {
        in_b[i] = 1;
        comp.boundary.push_back(y);
      }
    }
  }
  std::sort(comp.boundary.begin(), comp.boundary.end());
  auto count_in = [&](Vertex v, const std::vector<char>& set) {
    int k = 0;
    for (Vertex y : f.forest_neighbors(v)) {
      if (y != kNoVertex && set[static_cast<std::size_t>(y)]) ++k;
    }
    return k;
  };
  for (auto& cls : comp.boundary_classes) cls.clear();
  for (auto& cls : comp.component_classes) cls.clear();
  for (Vertex b : comp.boundary) comp.boundary_classes[static_cast<std::size_t>(count_in(b, in_c))].push_back(b);
  for (Vertex c : comp.component) comp.component_classes[static_cast<std::size_t>(count_in(c, in_b))].push_back(c);
  comp.classified = true;
}

LinearForest witness_forest(const RotationComponent& comp, const LinearForest& f, Vertex v) {
  LinearForest out = f;
  for (const RotationMove& mv : comp.witness(v)) out.rotate(mv);
  return out;
}

}  // namespace linforest
