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

#include "linforest/linear_forest.hpp"
#include "linforest/rotation_component.hpp"

namespace linforest {

struct OptimizerParams {
  /// States per merge search.
  std::size_t rotation_budget = kDefaultMaxStates;
  /// States per component computation in fix/sample steps.
  std::size_t component_budget = 2000;
  /// Cap on merge searches.
  std::size_t max_rounds = 1'000'000;
  std::uint64_t seed = 1;
  /// Search with one side's endpoints pinned before searching freely.
  bool bipartite_mode = false;
  /// Use breadth-first, collision-checked components (small graphs only).
  bool exact_components = false;
  /// Monte-Carlo samples used to estimate endpoint marginals for the
  /// restricted first sampling step; 0 draws uniformly from all of C.
  std::size_t refine_trials = 0;
};

struct OptimizeResult {
  LinearForest forest;
  /// The last search used its whole budget (or the whole family) and
  /// found no merge.
  bool budget_minimal = false;
  /// The last search exhausted the rotation family: no forest reachable by
  /// rotations admits a merge.
  bool exhaustive = false;
  /// One path per connected component, so the forest is minimum.
  bool certified_minimum = false;
  std::size_t merges = 0;
  std::size_t rounds = 0;
};

/// Repeatedly searches rotation sequences for a forest in which two
/// endpoints of distinct paths are adjacent, replays it and merges.
OptimizeResult minimize_forest(const LinearForest& f0, const OptimizerParams& p = {});

/// Component of (f, x) under the mode chosen by p.
RotationComponent compute_component(const LinearForest& f, const FixedEndpoints& x,
                                    const OptimizerParams& p);

struct FixStep {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  LinearForest forest;
  FixedEndpoints fixed;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  /// |N_G(u) ∩ C(F,X)|, the guaranteed drop for a minimum forest.
  std::size_t predicted_drop = 0;
};

/// One endpoint-fixing step: pick u in B_1 with most neighbours in C
/// (smallest label on ties), v the smallest of those neighbours, rotate v
/// to an endpoint and fix it. With B_1 empty, u stays kNoVertex and v is
/// the smallest vertex of C.
FixStep fix_endpoint_step(const LinearForest& f, const FixedEndpoints& x, const OptimizerParams& p = {});

struct SampleResult {
  LinearForest forest;
  bool budget_minimal = false;
  std::size_t steps = 0;
};

/// Random budget-minimal forest: minimize a random greedy cover, then
/// repeatedly draw u from C(F,X), rotate u to an endpoint and fix it.
SampleResult sample_min_forest(const Graph& g, std::uint64_t seed, const OptimizerParams& p = {});

/// Sampling continued from (f, x); used by the sampler and its refinement.
LinearForest sample_from(const LinearForest& f, FixedEndpoints x, std::uint64_t seed,
                         const OptimizerParams& p);

struct EndpointTable {
  std::size_t trials = 0;
  /// Fraction of samples with v in End(F).
  std::vector<double> frequency;
  /// sqrt(p(1-p)/trials).
  std::vector<double> stderr_;
  /// Mean multiplicity of v in End(F) (isolated counts twice).
  std::vector<double> mean_multiplicity;
};

EndpointTable estimate_endpoint_probs(const Graph& g, std::size_t trials, std::uint64_t seed,
                                      const OptimizerParams& p = {});

}  // namespace linforest
