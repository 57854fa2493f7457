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

#include "linforest/graph.hpp"

namespace linforest {

struct PairingOptions {
  /// Restarts of the pairing process before giving up.
  int max_restarts = 2000;
};

/// Uniform-ish random simple d-regular graph on n vertices.
///
/// Stubs are paired one pair at a time (Steger–Wormald); a pair that would
/// create a loop or a parallel edge is rejected and redrawn, and the whole
/// pairing restarts when no admissible pair remains. When d > (n-1)/2 the
/// complement degree is sampled and the result complemented.
Graph random_regular(Vertex n, int d, std::uint64_t seed, PairingOptions options = {});

/// Random simple d-regular bipartite graph with parts [0, n/2) and [n/2, n).
/// Requires n even and d <= n/2.
Graph random_bipartite_regular(Vertex n, int d, std::uint64_t seed, PairingOptions options = {});

/// random_regular redrawn with derived seeds until connected.
Graph random_connected_regular(Vertex n, int d, std::uint64_t seed, int max_attempts = 1000);

/// k disjoint copies of K_{d+1}; copy i occupies [i(d+1), (i+1)(d+1)).
Graph disjoint_cliques(int k, int d);

Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph star_graph(Vertex leaves);
Graph petersen_graph();
Graph edgeless_graph(Vertex n);

/// Complement within the full vertex set.
Graph complement(const Graph& g);

}  // namespace linforest
