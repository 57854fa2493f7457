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

#include "linforest/edge_coloring.hpp"
#include "linforest/optimizer.hpp"

namespace linforest {

/// Sampler budgets used by the pipeline when the caller has no preference.
/// The pipeline runs one sampler per iteration, so these are far below the
/// library defaults.
OptimizerParams pipeline_params(std::uint64_t seed = 1);

struct IterationRecord {
  int i = 0;
  Vertex host_n = 0;
  /// Auxiliary vertices added when regularizing to degree 2i.
  Vertex auxiliary_added = 0;
  std::size_t paths = 0;
  /// |End(F_i)| over the whole host, and over original vertices only.
  std::size_t endpoints = 0;
  std::size_t original_endpoints = 0;
  std::size_t e_edges = 0;
  bool budget_minimal = false;
};

struct DecompositionStats {
  /// Per original vertex: iterations in which it touched an edge of E_i.
  std::vector<int> incidence;
  /// D_v = 2 * incidence[v]; bounds the leftover degree of v.
  std::vector<int> d_bound;
  int max_d_bound = 0;
  int leftover_max_degree = 0;
  std::vector<IterationRecord> iterations;
};

struct Decomposition {
  /// F_d, ..., F_1 restricted to the input graph (possibly empty).
  std::vector<std::vector<Edge>> forests;
  Graph leftover;
  EdgeColoring leftover_coloring;
  /// Nonempty forests plus leftover colors.
  std::size_t total_parts = 0;
};

struct DecompositionRun {
  Decomposition decomposition;
  DecompositionStats stats;
};

/// Peels a low-endpoint linear forest and the 2-factor edges at its
/// endpoints off a 2i-regular host for i = ⌈Δ/2⌉, ..., 1, re-regularizing
/// in between, then edge-colors the leftover.
DecompositionRun decompose_linear_arboricity(const Graph& g, std::uint64_t seed, const OptimizerParams& p);

/// Every edge in exactly one forest or leftover color class, every forest a
/// linear forest and every color class a matching.
bool is_exact_partition(const Graph& g, const Decomposition& d);

int default_fractional_threshold(int max_degree);

struct FractionalFamily {
  std::vector<std::vector<Edge>> family;
  std::vector<Edge> dropped;
  int threshold = 0;
  int leftover_max_degree = 0;
  DecompositionStats stats;
};

/// The peeling forests plus a coloring of the leftover after dropping edges
/// at vertices of leftover degree above c.
FractionalFamily fractional_family(const Graph& g, std::uint64_t seed, int c, const OptimizerParams& p);

struct FractionalEstimate {
  std::size_t runs = 0;
  /// Per g.edges() entry: mean probability that a uniformly chosen family
  /// member contains the edge.
  std::vector<double> coverage;
  double min_coverage = 0.0;
  /// 1 / min_coverage (infinite when some edge is never covered).
  double implied_bound = 0.0;
  double max_dropped_fraction = 0.0;
  std::size_t max_family_size = 0;
  /// Smallest threshold that would have dropped nothing in every run.
  int smallest_clean_threshold = 1;
};

FractionalEstimate estimate_fractional(const Graph& g, std::size_t runs, std::uint64_t seed, int c,
                                       const OptimizerParams& p);

}  // namespace linforest
