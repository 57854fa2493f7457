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

#include "linforest/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "linforest/regularize.hpp"
#include "linforest/rng.hpp"
#include "linforest/two_factor.hpp"

namespace linforest {

namespace {

struct Peeling {
  std::vector<std::vector<Edge>> forests;
  std::vector<Edge> leftover;
  DecompositionStats stats;
};

std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
}

Peeling peel(const Graph& g, std::uint64_t seed, const OptimizerParams& p) {
  Peeling out;
  const Vertex n = g.n();
  out.stats.incidence.assign(static_cast<std::size_t>(n), 0);
  const int d = (g.max_degree() + 1) / 2;

  // Original edges not yet removed by any iteration. Regularization may
  // re-add a removed original pair later; such an edge is auxiliary.
  std::unordered_set<std::uint64_t> live;
  for (const Edge& e : g.edges()) live.insert(edge_key(e));

  EmbeddingMap map = regularize(g, 2 * d);
  Graph host = map.host;
  Vertex aux_added = map.auxiliary_vertices();
  for (int i = d; i >= 1; --i) {
    IterationRecord rec;
    rec.i = i;
    rec.host_n = host.n();
    rec.auxiliary_added = aux_added;

    const Graph factor = two_factor(host);
    OptimizerParams q = p;
    q.bipartite_mode = false;
    const SampleResult sample = sample_min_forest(host, derive_seed(seed, static_cast<std::uint64_t>(i)), q);
    const LinearForest& f = sample.forest;
    rec.paths = f.path_count();
    rec.budget_minimal = sample.budget_minimal;
    for (Vertex v = 0; v < host.n(); ++v) {
      const auto k = static_cast<std::size_t>(f.endpoint_multiplicity(v));
      rec.endpoints += k;
      if (v < n) rec.original_endpoints += k;
    }

    std::unordered_set<std::uint64_t> removed;
    std::vector<Edge> forest_edges = f.edges();
    for (const Edge& e : forest_edges) removed.insert(edge_key(e));
    std::vector<char> touched(static_cast<std::size_t>(host.n()), 0);
    for (const Edge& e : factor.edges()) {
      if (!f.is_endpoint(e.u) && !f.is_endpoint(e.v)) continue;
      ++rec.e_edges;
      removed.insert(edge_key(e));
      touched[static_cast<std::size_t>(e.u)] = 1;
      touched[static_cast<std::size_t>(e.v)] = 1;
    }
    for (Vertex v = 0; v < n; ++v) out.stats.incidence[static_cast<std::size_t>(v)] += touched[static_cast<std::size_t>(v)];

    std::vector<Edge> restricted;
    for (const Edge& e : forest_edges) {
      if (e.v < n && live.count(edge_key(e)) != 0) restricted.push_back(e);
    }
    for (const Edge& e : host.edges()) {
      if (e.v < n && removed.count(edge_key(e)) != 0 && live.erase(edge_key(e)) != 0) {
        if (!std::binary_search(restricted.begin(), restricted.end(), e)) out.leftover.push_back(e);
      }
    }
    out.forests.push_back(std::move(restricted));

    std::vector<Edge> remaining;
    for (const Edge& e : host.edges()) {
      if (removed.count(edge_key(e)) == 0) remaining.push_back(e);
    }
    const Graph rest(host.n(), remaining);
    if (rest.max_degree() > 2 * (i - 1)) {
      throw InternalError("decomposition: remainder has degree " + std::to_string(rest.max_degree()) +
                          " above " + std::to_string(2 * (i - 1)));
    }
    out.stats.iterations.push_back(rec);
    if (i > 1) {
      map = regularize(rest, 2 * (i - 1));
      host = map.host;
      aux_added = map.auxiliary_vertices();
    }
  }
  if (!live.empty()) throw InternalError("decomposition: original edges survived the peeling");
  std::sort(out.leftover.begin(), out.leftover.end());
  auto& s = out.stats;
  for (int k : s.incidence) {
    s.d_bound.push_back(2 * k);
    s.max_d_bound = std::max(s.max_d_bound, 2 * k);
  }
  return out;
}

bool is_linear_forest(const Graph& g, const std::vector<Edge>& edges) {
  try {
    (void)LinearForest::from_edges(g, edges);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

}  // namespace

OptimizerParams pipeline_params(std::uint64_t seed) {
  OptimizerParams p;
  p.rotation_budget = 5000;
  p.component_budget = 300;
  p.seed = seed;
  return p;
}

DecompositionRun decompose_linear_arboricity(const Graph& g, std::uint64_t seed, const OptimizerParams& p) {
  Peeling peeled = peel(g, seed, p);
  DecompositionRun run;
  Decomposition& dec = run.decomposition;
  dec.forests = std::move(peeled.forests);
  dec.leftover = Graph(g.n(), peeled.leftover);
  dec.leftover_coloring = vizing_color(dec.leftover);
  for (const auto& f : dec.forests) dec.total_parts += f.empty() ? 0 : 1;
  dec.total_parts += static_cast<std::size_t>(dec.leftover_coloring.num_colors);
  run.stats = std::move(peeled.stats);
  run.stats.leftover_max_degree = dec.leftover.max_degree();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (dec.leftover.degree(v) > run.stats.d_bound[static_cast<std::size_t>(v)]) {
      throw InternalError("decomposition: leftover degree of " + std::to_string(v) + " exceeds D_v");
    }
  }
  if (!is_exact_partition(g, dec)) throw InternalError("decomposition: parts do not partition E(G)");
  return run;
}

bool is_exact_partition(const Graph& g, const Decomposition& d) {
  std::vector<Edge> all;
  for (const auto& f : d.forests) {
    if (!is_linear_forest(g, f)) return false;
    all.insert(all.end(), f.begin(), f.end());
  }
  if (!is_proper_edge_coloring(d.leftover, d.leftover_coloring)) return false;
  for (const auto& cls : d.leftover_coloring.classes()) {
    if (!is_linear_forest(g, cls)) return false;
    all.insert(all.end(), cls.begin(), cls.end());
  }
  std::sort(all.begin(), all.end());
  return all == g.edges();
}

int default_fractional_threshold(int max_degree) {
  return static_cast<int>(std::ceil(8.0 * (std::log(max_degree + 2.0) + 1.0)));
}

FractionalFamily fractional_family(const Graph& g, std::uint64_t seed, int c, const OptimizerParams& p) {
  if (c < 1) throw InvalidArgument("fractional_family: threshold must be at least 1");
  Peeling peeled = peel(g, seed, p);
  FractionalFamily out;
  out.threshold = c;
  const Graph leftover(g.n(), peeled.leftover);
  out.leftover_max_degree = leftover.max_degree();
  std::vector<Edge> kept;
  for (const Edge& e : peeled.leftover) {
    if (leftover.degree(e.u) > c || leftover.degree(e.v) > c) {
      out.dropped.push_back(e);
    } else {
      kept.push_back(e);
    }
  }
  out.family = std::move(peeled.forests);
  const EdgeColoring coloring = vizing_color(Graph(g.n(), kept));
  if (coloring.num_colors > c + 1) throw InternalError("fractional_family: kept leftover needs more than c+1 colors");
  for (auto& cls : coloring.classes()) out.family.push_back(std::move(cls));
  out.stats = std::move(peeled.stats);
  out.stats.leftover_max_degree = out.leftover_max_degree;
  return out;
}

FractionalEstimate estimate_fractional(const Graph& g, std::size_t runs, std::uint64_t seed, int c,
                                       const OptimizerParams& p) {
  if (runs == 0) throw InvalidArgument("estimate_fractional: runs must be positive");
  FractionalEstimate est;
  est.runs = runs;
  const std::vector<Edge> edges = g.edges();
  std::vector<double> sum(edges.size(), 0.0);
  for (std::size_t r = 0; r < runs; ++r) {
    const FractionalFamily fam = fractional_family(g, derive_seed(seed, r), c, p);
    est.max_family_size = std::max(est.max_family_size, fam.family.size());
    est.smallest_clean_threshold = std::max(est.smallest_clean_threshold, fam.leftover_max_degree);
    if (!edges.empty()) {
      est.max_dropped_fraction = std::max(
          est.max_dropped_fraction, static_cast<double>(fam.dropped.size()) / static_cast<double>(edges.size()));
    }
    const double share = fam.family.empty() ? 0.0 : 1.0 / static_cast<double>(fam.family.size());
    for (const auto& member : fam.family) {
      for (const Edge& e : member) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        sum[static_cast<std::size_t>(it - edges.begin())] += share;
      }
    }
  }
  est.coverage.reserve(edges.size());
  for (double s : sum) est.coverage.push_back(s / static_cast<double>(runs));
  if (edges.empty()) {
    est.min_coverage = 1.0;
    est.implied_bound = 0.0;
  } else {
    est.min_coverage = *std::min_element(est.coverage.begin(), est.coverage.end());
    est.implied_bound = est.min_coverage > 0.0 ? 1.0 / est.min_coverage : std::numeric_limits<double>::infinity();
  }
  return est;
}

}  // namespace linforest
