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

#include <cstdint>
#include <vector>

#include "linforest/optimizer.hpp"

namespace linforest {

/// Closed walk visiting every vertex; walk.front() == walk.back() except for
/// the one-vertex tour {0}.
struct Tour {
  std::vector<Vertex> walk;
  std::size_t length() const { return walk.empty() ? 0 : walk.size() - 1; }
};

bool is_valid_tour(const Graph& g, const Tour& t);
/// Every vertex appears exactly once (n >= 3).
bool is_hamilton_cycle(const Graph& g, const Tour& t);

/// A single spanning path is first rotated (within `close_budget` states)
/// until its ends are adjacent, giving a Hamilton cycle. Otherwise the
/// paths are linked by a BFS tree of connecting edges grown from the
/// longest path, every path and tree edge is walked twice along an Euler
/// circuit, and the walk is shortcut while every vertex stays covered.
/// Throws InvalidArgument when the host is disconnected.
Tour build_tour(const LinearForest& f, std::size_t close_budget = kDefaultMaxStates);

/// Removes backtracks a-b-a and detours a-b-c (with ac an edge) whose middle
/// vertex is visited elsewhere, until none is left.
void shortcut_tour(const Graph& g, Tour& t);

struct TourReport {
  Tour tour;
  double ratio = 0.0;
  std::size_t paths = 0;
};

/// minimize_forest from a random greedy cover, then build_tour.
TourReport tour_length_report(const Graph& g, const OptimizerParams& p, std::uint64_t seed);

}  // namespace linforest
