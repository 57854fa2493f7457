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

#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

/// Proper edge coloring; color[i] belongs to g.edges()[i]. Colors are
/// 0..num_colors-1, all of them used.
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> color;
  int num_colors = 0;

  /// Edges of each color, each list sorted.
  std::vector<std::vector<Edge>> classes() const;
};

/// Misra–Gries fan rotation with cd-path inversion. At most Δ+1 colors.
EdgeColoring vizing_color(const Graph& g);

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace linforest
