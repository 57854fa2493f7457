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

#include <optional>
#include <span>
#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

/// A regular supergraph whose first `original_n` vertices are the input
/// graph's vertices with unchanged labels.
struct EmbeddingMap {
  Vertex original_n = 0;
  Graph host;
  /// Edges added between original vertices.
  std::size_t added_original_edges = 0;

  Vertex auxiliary_vertices() const { return host.n() - original_n; }
  bool is_original(Vertex v) const { return v < original_n; }
};

/// Extends g to a simple r-regular supergraph.
///
/// First joins non-adjacent deficient vertices of g, largest deficiency
/// first. The remaining deficiency is served by q auxiliary vertices: each
/// deficient vertex is attached to distinct auxiliary vertices (least
/// loaded first) and the auxiliaries' residual degrees are realized with
/// Havel–Hakimi. q starts at the largest remaining deficiency and grows
/// (keeping the degree sum even) until the residual sequence is graphical.
EmbeddingMap regularize(const Graph& g, int r);

/// Havel–Hakimi realization of a degree sequence on vertices offset..offset+k-1.
/// Returns nullopt when the sequence is not graphical.
std::optional<std::vector<Edge>> havel_hakimi(std::span<const int> degrees, Vertex offset = 0);

/// True when `host` is r-regular and contains every edge of `g` on the same labels.
bool is_regular_embedding(const Graph& g, const EmbeddingMap& map, int r);

}  // namespace linforest
