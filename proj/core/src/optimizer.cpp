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

#include "linforest/optimizer.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "linforest/rng.hpp"

namespace linforest {

namespace {

struct MergeHit {
  std::vector<RotationMove> moves;
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
};

struct MergeSearch {
  std::optional<MergeHit> hit;
  bool complete = false;
};

// First reachable forest (depth-first order) with two adjacent endpoints on
// distinct paths.
MergeSearch search_merge(const LinearForest& f, const FixedEndpoints& x, std::size_t budget) {
  const Graph& g = f.host();
  Vertex a = kNoVertex;
  Vertex b = kNoVertex;
  auto try_end = [&](const LinearForest& s, Vertex e) {
    if (!s.is_endpoint(e)) return false;
    for (Vertex y : g.neighbors(e)) {
      if (s.is_endpoint(y) && !s.same_path(e, y)) {
        a = e;
        b = y;
        return true;
      }
    }
    return false;
  };
  auto visit = [&](const LinearForest& s, std::uint32_t, const RotationMove* last) {
    if (last == nullptr) {
      for (Vertex v = 0; v < s.n(); ++v) {
        if (try_end(s, v)) return true;
      }
      return false;
    }
    // Only the paths through w and u changed their endpoint sets.
    const Vertex w = last->new_endpoint;
    if (try_end(s, w) || try_end(s, s.other_end(w))) return true;
    const auto [h, t] = s.path_ends(last->pivot);
    return try_end(s, h) || try_end(s, t);
  };
  ExploreOptions opt;
  opt.order = ExploreOrder::kDepthFirst;
  opt.max_states = budget;
  ExploreResult res = explore_rotations(f, x, opt, visit);
  MergeSearch out;
  out.complete = res.complete;
  if (res.stopped) out.hit = MergeHit{res.tree.moves_to(res.stop_node), a, b};
  return out;
}

FixedEndpoints pin_side(const LinearForest& f, const std::vector<int>& side, int which) {
  FixedEndpoints x(f.n());
  for (Vertex v = 0; v < f.n(); ++v) {
    if (side[static_cast<std::size_t>(v)] != which) continue;
    for (int k = 0; k < f.endpoint_multiplicity(v); ++k) x.add(v);
  }
  return x;
}

std::size_t unfixed_endpoints(const LinearForest& f, const FixedEndpoints& x) {
  return 2 * f.path_count() - x.size();
}

Vertex draw(const std::vector<Vertex>& from, Rng& rng) {
  return from[static_cast<std::size_t>(rng.below(from.size()))];
}

}  // namespace

OptimizeResult minimize_forest(const LinearForest& f0, const OptimizerParams& p) {
  OptimizeResult res{f0};
  LinearForest& f = res.forest;
  const Graph& g = f.host();
  const std::size_t components = connected_components(g);
  std::optional<Bipartition> parts;
  if (p.bipartite_mode) {
    parts = bipartition(g);
    if (!parts->bipartite()) parts.reset();
  }
  while (true) {
    if (f.path_count() == components) {
      res.certified_minimum = res.budget_minimal = res.exhaustive = true;
      return res;
    }
    bool merged = false;
    bool free_complete = false;
    const int passes = parts ? 3 : 1;
    for (int pass = 0; pass < passes && !merged; ++pass) {
      if (res.rounds >= p.max_rounds) return res;
      ++res.rounds;
      const bool pinned = pass + 1 < passes;
      const FixedEndpoints x = pinned ? pin_side(f, parts->side, pass) : FixedEndpoints(f.n());
      MergeSearch search = search_merge(f, x, p.rotation_budget);
      if (!pinned) free_complete = search.complete;
      if (!search.hit) continue;
      for (const RotationMove& mv : search.hit->moves) f.rotate(mv);
      f.merge(search.hit->a, search.hit->b);
      ++res.merges;
      merged = true;
    }
    if (!merged) {
      res.budget_minimal = true;
      res.exhaustive = free_complete;
      return res;
    }
  }
}

RotationComponent compute_component(const LinearForest& f, const FixedEndpoints& x, const OptimizerParams& p) {
  return p.exact_components ? component_exact(f, x, p.component_budget) : component_greedy(f, x, p.component_budget);
}

FixStep fix_endpoint_step(const LinearForest& f, const FixedEndpoints& x, const OptimizerParams& p) {
  require_fixed_subset(f, x);
  if (unfixed_endpoints(f, x) == 0) throw InvalidArgument("fix_endpoint_step: every endpoint is fixed");
  RotationComponent comp = compute_component(f, x, p);
  if (comp.component.empty()) throw InvalidArgument("fix_endpoint_step: component is empty");
  classify_boundary(f, comp);
  const auto& b1 = comp.boundary_classes[1];
  const Graph& g = f.host();
  FixStep step{kNoVertex, kNoVertex, f, x};
  if (b1.empty()) {
    // No pivot to charge the drop to; fix the smallest free endpoint.
    step.v = comp.component.front();
    step.forest = witness_forest(comp, f, step.v);
    step.fixed.add(step.v);
    step.size_before = comp.size();
    step.size_after = compute_component(step.forest, step.fixed, p).size();
    return step;
  }
  for (Vertex u : b1) {
    std::size_t count = 0;
    for (Vertex y : g.neighbors(u)) count += comp.contains(y) ? 1 : 0;
    if (count > step.predicted_drop) {
      step.predicted_drop = count;
      step.u = u;
    }
  }
  for (Vertex y : g.neighbors(step.u)) {
    if (comp.contains(y)) {
      step.v = y;
      break;
    }
  }
  step.forest = witness_forest(comp, f, step.v);
  step.fixed.add(step.v);
  step.size_before = comp.size();
  step.size_after = compute_component(step.forest, step.fixed, p).size();
  return step;
}

LinearForest sample_from(const LinearForest& f, FixedEndpoints x, std::uint64_t seed, const OptimizerParams& p) {
  require_fixed_subset(f, x);
  Rng rng(seed);
  LinearForest cur = f;
  while (unfixed_endpoints(cur, x) > 0) {
    const RotationComponent comp = compute_component(cur, x, p);
    if (comp.component.empty()) throw InternalError("sampler: empty component with unfixed endpoints left");
    const Vertex u = draw(comp.component, rng);
    cur = witness_forest(comp, cur, u);
    x.add(u);
  }
  return cur;
}

SampleResult sample_min_forest(const Graph& g, std::uint64_t seed, const OptimizerParams& p) {
  OptimizeResult opt = minimize_forest(greedy_path_cover(g, derive_seed(seed, 0)), p);
  SampleResult res{opt.forest, opt.budget_minimal};
  res.steps = 2 * opt.forest.path_count();
  const FixedEndpoints none(g.n());
  if (p.refine_trials == 0 || res.steps == 0) {
    res.forest = sample_from(opt.forest, none, derive_seed(seed, 1), p);
    return res;
  }
  // One level of restriction: estimate each vertex's endpoint marginal under
  // the uniform first draw, keep U = {v : estimate <= 8/(d+1)} and draw the
  // first vertex from U instead of C.
  const RotationComponent comp = compute_component(opt.forest, none, p);
  if (comp.component.empty()) throw InternalError("sampler: empty component with unfixed endpoints left");
  Rng rng(derive_seed(seed, 2));
  std::vector<std::size_t> hits(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t t = 0; t < p.refine_trials; ++t) {
    const Vertex u = draw(comp.component, rng);
    FixedEndpoints x = none;
    x.add(u);
    const LinearForest out = sample_from(witness_forest(comp, opt.forest, u), x, derive_seed(seed, 3 + t), p);
    for (Vertex v = 0; v < g.n(); ++v) hits[static_cast<std::size_t>(v)] += out.is_endpoint(v) ? 1 : 0;
  }
  const double threshold = 8.0 / (g.max_degree() + 1);
  std::vector<Vertex> restricted;
  for (Vertex v : comp.component) {
    if (static_cast<double>(hits[static_cast<std::size_t>(v)]) / static_cast<double>(p.refine_trials) <= threshold) {
      restricted.push_back(v);
    }
  }
  if (restricted.empty()) restricted = comp.component;
  const Vertex u = draw(restricted, rng);
  FixedEndpoints x = none;
  x.add(u);
  res.forest = sample_from(witness_forest(comp, opt.forest, u), x, derive_seed(seed, 1), p);
  return res;
}

EndpointTable estimate_endpoint_probs(const Graph& g, std::size_t trials, std::uint64_t seed,
                                      const OptimizerParams& p) {
  if (trials == 0) throw InvalidArgument("estimate_endpoint_probs: trials must be positive");
  const auto n = static_cast<std::size_t>(g.n());
  EndpointTable table;
  table.trials = trials;
  std::vector<std::size_t> hits(n, 0);
  std::vector<std::size_t> mult(n, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const SampleResult s = sample_min_forest(g, derive_seed(seed, t), p);
    for (Vertex v = 0; v < g.n(); ++v) {
      const int k = s.forest.endpoint_multiplicity(v);
      hits[static_cast<std::size_t>(v)] += k > 0 ? 1 : 0;
      mult[static_cast<std::size_t>(v)] += static_cast<std::size_t>(k);
    }
  }
  const auto denom = static_cast<double>(trials);
  for (std::size_t v = 0; v < n; ++v) {
    const double freq = static_cast<double>(hits[v]) / denom;
    table.frequency.push_back(freq);
    table.stderr_.push_back(std::sqrt(freq * (1.0 - freq) / denom));
    table.mean_multiplicity.push_back(static_cast<double>(mult[v]) / denom);
  }
  return table;
}

}  // namespace linforest
