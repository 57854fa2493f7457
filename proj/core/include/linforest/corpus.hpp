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

#include <string>
#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

struct CorpusGraph {
  std::string name;
  Graph graph;
};

/// One representative of every isomorphism class of connected d-regular
/// graphs on n vertices, by backtracking with vertex 0 adjacent to 1..d.
std::vector<Graph> connected_regular_graphs(Vertex n, int d);

/// All connected d-regular graphs with n <= max_n and d in {2, 3}.
std::vector<CorpusGraph> small_corpus(Vertex max_n = 8);

/// C4, K3, K4, K5, K33 (= K_{3,3}) and the Petersen graph.
std::vector<CorpusGraph> named_fixtures();

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace linforest
