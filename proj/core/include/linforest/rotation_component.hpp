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

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "linforest/linear_forest.hpp"

namespace linforest {

inline constexpr std::size_t kDefaultMaxStates = 200'000;

/// Rotation sequences explored from a start forest, as a parent-pointer tree.
/// Node 0 is the start forest; node k > 0 is reached from its parent by `move`.
struct SearchTree {
  static constexpr std::uint32_t kNoNode = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint32_t parent = kNoNode;
    RotationMove move;
  };
  std::vector<Node> nodes;

  /// Moves from the root to `node`, in application order.
  std::vector<RotationMove> moves_to(std::uint32_t node) const;
};

enum class ExploreOrder { kBreadthFirst, kDepthFirst };

struct ExploreOptions {
  ExploreOrder order = ExploreOrder::kDepthFirst;
  /// Cap on distinct states visited, root included.
  std::size_t max_states = kDefaultMaxStates;
  /// Enter a child state only if its new endpoint has not been seen as a
  /// rotatable endpoint before (Pósa-style discovery search).
  bool novelty_only = false;
  /// Keep each state's sorted edge list and compare on fingerprint hits, so
  /// a 128-bit collision can never merge two distinct states. Breadth-first only.
  bool verify_collisions = false;
};

struct ExploreResult {
  SearchTree tree;
  std::size_t states = 0;
  /// Every state reachable under the pruning rules was visited.
  bool complete = false;
  /// The visitor asked to stop; `stop_node` is the state it stopped at.
  bool stopped = false;
  std::uint32_t stop_node = 0;
};

/// Called once per distinct state, root first. `last` is the move that led to
/// the state (nullptr at the root). Return true to stop the search there.
using StateVisitor =
    std::function<bool(const LinearForest& state, std::uint32_t node, const RotationMove* last)>;

/// Explores the family of forests reachable from `start` by rotations that
/// never move an endpoint of `x`. Depth-first runs in place with undo;
/// breadth-first keeps a copy per frontier state.
ExploreResult explore_rotations(const LinearForest& start, const FixedEndpoints& x,
                                const ExploreOptions& options, const StateVisitor& visit = {});

/// C(F,X), its boundary and the path-neighbour classification.
struct RotationComponent {
  /// Vertices that are a rotatable endpoint in some explored forest, sorted.
  std::vector<Vertex> component;
  /// N_G(C) \ C, sorted. Filled by classify_boundary.
  std::vector<Vertex> boundary;
  /// boundary_classes[i] = B_i: boundary vertices with i path-neighbours in C.
  std::array<std::vector<Vertex>, 3> boundary_classes;
  /// component_classes[i] = C_i: component vertices with i path-neighbours in B.
  std::array<std::vector<Vertex>, 3> component_classes;
  bool classified = false;

  bool exact = false;
  bool budget_exhausted = false;
  std::size_t states_explored = 0;

  SearchTree tree;
  /// Per vertex: tree node of the first forest exposing it, or kNoNode.
  std::vector<std::uint32_t> witness_node;

  bool contains(Vertex v) const;
  std::size_t size() const { return component.size(); }
  /// Rotation sequence from the start forest to a forest with v rotatable.
  std::vector<RotationMove> witness(Vertex v) const;
};

/// Breadth-first enumeration of the reachable family with collision-checked
/// state identity. Exact when the family fits in `max_states`; otherwise a
/// sound under-approximation with budget_exhausted set.
RotationComponent component_exact(const LinearForest& f, const FixedEndpoints& x,
                                  std::size_t max_states = kDefaultMaxStates);

/// Budgeted depth-first under-approximation: a discovery pass that only
/// follows rotations exposing new endpoints, then a plain depth-first pass
/// with visited-state pruning. Each pass visits at most `max_states` states.
RotationComponent component_greedy(const LinearForest& f, const FixedEndpoints& x,
                                   std::size_t max_states = kDefaultMaxStates);

/// Fills boundary and the B_i / C_i classes with respect to f.
void classify_boundary(const LinearForest& f, RotationComponent& comp);

/// Replays the witness of v from f. Throws InvalidArgument if v is not in C.
LinearForest witness_forest(const RotationComponent& comp, const LinearForest& f, Vertex v);

/// Throws InvalidArgument unless x is a sub-multiset of End(f).
void require_fixed_subset(const LinearForest& f, const FixedEndpoints& x);

}  // namespace linforest
