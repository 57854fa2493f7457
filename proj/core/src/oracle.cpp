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

#include "linforest/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "linforest/rng.hpp"
#include "linforest/rotation_component.hpp"

namespace linforest {

namespace {

// Degree <= 2 and acyclic on n vertices.
bool is_linear(Vertex n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Edge& e : edges) {
    if (++deg[static_cast<std::size_t>(e.u)] > 2 || ++deg[static_cast<std::size_t>(e.v)] > 2) return false;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

template <typename Visit>
void for_each_linear_subset(const Graph& g, Visit&& visit) {
  const std::vector<Edge> all = g.edges();
  if (all.size() > 24) throw InvalidArgument("edge subset enumeration needs m <= 24");
  std::vector<Edge> chosen;
  const std::uint32_t limit = 1u << all.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((mask >> i) & 1u) chosen.push_back(all[i]);
    }
    if (is_linear(g.n(), chosen)) visit(chosen);
  }
}

struct Analysis {
  std::vector<Vertex> c;
  std::vector<Vertex> b;
  std::array<std::vector<Vertex>, 3> b_class;
  std::array<std::vector<Vertex>, 3> c_class;
};

Analysis analyse(const LinearForest& f, const std::vector<Vertex>& c) {
  const Graph& g = f.host();
  Analysis a;
  a.c = c;
  std::vector<int> role(static_cast<std::size_t>(g.n()), 0);  // 1 = C, 2 = B
  for (Vertex v : c) role[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (role[static_cast<std::size_t>(v)] == 1) continue;
    for (Vertex y : g.neighbors(v)) {
      if (role[static_cast<std::size_t>(y)] == 1) {
        role[static_cast<std::size_t>(v)] = 2;
        a.b.push_back(v);
        break;
      }
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const int r = role[static_cast<std::size_t>(v)];
    if (r == 0) continue;
    int k = 0;
    for (Vertex y = 0; y < g.n(); ++y) {
      if (f.has_edge(v, y) && role[static_cast<std::size_t>(y)] == 3 - r) ++k;
    }
    (r == 1 ? a.c_class : a.b_class)[static_cast<std::size_t>(k)].push_back(v);
  }
  return a;
}

int regular_degree(const Graph& g) {
  const int d = g.n() == 0 ? 0 : g.degree(0);
  if (!g.is_regular(d)) throw InvalidArgument("lemma checks need a regular graph");
  return d;
}

void require_minimum(const LinearForest& f) {
  if (f.path_count() != brute_min_path_cover(f.host())) {
    throw InvalidArgument("lemma checks need a minimum linear forest");
  }
}

long long sz(const std::vector<Vertex>& s) { return static_cast<long long>(s.size()); }

}  // namespace

long long CheckReport::value(const std::string& key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  throw InvalidArgument("CheckReport: no value named " + key);
}

std::size_t brute_min_path_cover(const Graph& g) {
  const Vertex n = g.n();
  if (n > 20) throw InvalidArgument("brute_min_path_cover needs n <= 20");
  if (n == 0) return 0;
  const std::uint32_t full = (1u << n) - 1;
  constexpr std::uint8_t kUnset = 0xff;
  // best[mask * n + v]: fewest paths covering mask with the last path ending at v.
  std::vector<std::uint8_t> best((static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(n), kUnset);
  auto at = [&](std::uint32_t mask, Vertex v) -> std::uint8_t& {
    return best[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  };
  for (Vertex v = 0; v < n; ++v) at(1u << v, v) = 1;
  std::uint8_t answer = kUnset;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (Vertex v = 0; v < n; ++v) {
      const std::uint8_t cur = at(mask, v);
      if (cur == kUnset) continue;
      if (mask == full) {
        answer = std::min(answer, cur);
        continue;
      }
      for (Vertex y = 0; y < n; ++y) {
        if (mask & (1u << y)) continue;
        const std::uint32_t next = mask | (1u << y);
        const std::uint8_t cost = static_cast<std::uint8_t>(cur + (g.has_edge(v, y) ? 0 : 1));
        if (cost < at(next, y)) at(next, y) = cost;
      }
    }
  }
  return answer;
}

std::size_t max_linear_forest_edges(const Graph& g) {
  std::size_t best = 0;
  for_each_linear_subset(g, [&](const std::vector<Edge>& s) { best = std::max(best, s.size()); });
  return best;
}

std::vector<std::vector<Edge>> enumerate_min_forests(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::size_t best = 0;
  for_each_linear_subset(g, [&](const std::vector<Edge>& s) {
    if (s.size() > best) {
      best = s.size();
      out.clear();
    }
    if (s.size() == best) out.push_back(s);
  });
  return out;
}

std::vector<Vertex> brute_component(const LinearForest& f, const FixedEndpoints& x, std::size_t state_limit) {
  const Graph& g = f.host();
  const Vertex n = g.n();
  for (Vertex v : x.to_list()) {
    if (v >= n || x.count(v) > f.endpoint_multiplicity(v)) throw InvalidArgument("brute_component: X not in End(F)");
  }
  auto degrees = [&](const std::vector<Edge>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
  };
  std::vector<char> in_c(static_cast<std::size_t>(n), 0);
  std::set<std::vector<Edge>> seen;
  std::deque<std::vector<Edge>> queue;
  seen.insert(f.edges());
  queue.push_back(f.edges());
  while (!queue.empty()) {
    const std::vector<Edge> cur = std::move(queue.front());
    queue.pop_front();
    const std::vector<int> deg = degrees(cur);
    for (Vertex v = 0; v < n; ++v) {
      const int free_copies = 2 - deg[static_cast<std::size_t>(v)] - x.count(v);
      if (free_copies <= 0) continue;
      in_c[static_cast<std::size_t>(v)] = 1;
      for (Vertex u = 0; u < n; ++u) {
        if (!g.has_edge(u, v) || std::binary_search(cur.begin(), cur.end(), Edge(u, v))) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (!std::binary_search(cur.begin(), cur.end(), Edge(u, w))) continue;
          std::vector<Edge> next;
          for (const Edge& e : cur) {
            if (!(e == Edge(u, w))) next.push_back(e);
          }
          next.emplace_back(u, v);
          std::sort(next.begin(), next.end());
          if (!is_linear(n, next) || seen.count(next) != 0) continue;
          if (seen.size() >= state_limit) throw InvalidArgument("brute_component: state limit exceeded");
          seen.insert(next);
          queue.push_back(std::move(next));
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (in_c[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::size_t count_edges_between(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<char> in_a(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> in_b(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : a) in_a[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : b) in_b[static_cast<std::size_t>(v)] = 1;
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++count;
  }
  return count;
}

namespace {

CheckReport component_bound_report(const LinearForest& f, const FixedEndpoints& x, const std::vector<Vertex>& c,
                                   int d, bool bipartite_form) {
  const auto ell = static_cast<long long>(2 * f.path_count() - x.size());
  CheckReport rep;
  rep.lemma = bipartite_form ? "component_bound_bipartite" : "component_bound";
  rep.pass = (bipartite_form ? 2 : 4) * sz(c) >= (d + 1) * ell;
  rep.values = {{"d", d}, {"C", sz(c)}, {"free_endpoints", ell}};
  return rep;
}

// Side shared by every free endpoint, or -1 when they straddle both sides
// (or there are none).
int free_endpoint_side(const LinearForest& f, const FixedEndpoints& x, const Bipartition& bp) {
  int side = -1;
  for (Vertex v = 0; v < f.n(); ++v) {
    if (f.endpoint_multiplicity(v) <= x.count(v)) continue;
    const int s = bp.side[static_cast<std::size_t>(v)];
    if (side >= 0 && s != side) return -1;
    side = s;
  }
  return side;
}

CheckReport doublecount_report(const Graph& g, const Analysis& a, long long d) {
  const auto e_cb1 = static_cast<long long>(count_edges_between(g, a.c, a.b_class[1]));
  const auto e_c = static_cast<long long>(count_edges_between(g, a.c, a.c));
  const long long lhs2 = 2 * e_cb1;
  const long long rhs2 = d * sz(a.b_class[1]) + d * sz(a.c_class[1]) + 2 * d * sz(a.c_class[0]) - 4 * e_c;
  CheckReport rep;
  rep.lemma = "b0_and_doublecount";
  rep.pass = a.b_class[0].empty() && lhs2 >= rhs2;
  rep.values = {{"B0", sz(a.b_class[0])}, {"B1", sz(a.b_class[1])}, {"C0", sz(a.c_class[0])},
                {"C1", sz(a.c_class[1])}, {"e_C_B1", e_cb1},         {"e_C", e_c},
                {"lhs_x2", lhs2},         {"rhs_x2", rhs2}};
  return rep;
}

CheckReport shrinkage_report(const Graph& g, const Analysis& a, Vertex v, Vertex u, std::size_t c_after) {
  long long nu = 0;
  for (Vertex z : g.neighbors(u)) nu += std::binary_search(a.c.begin(), a.c.end(), z) ? 1 : 0;
  CheckReport rep;
  rep.lemma = "fix_shrinkage";
  rep.pass = static_cast<long long>(c_after) <= sz(a.c) - nu;
  rep.values = {{"v", v}, {"u", u}, {"C_before", sz(a.c)}, {"C_after", static_cast<long long>(c_after)},
                {"N_u_in_C", nu}};
  return rep;
}

}  // namespace

CheckReport check_component_bound(const LinearForest& f, const FixedEndpoints& x, bool bipartite_form) {
  const Graph& g = f.host();
  const int d = regular_degree(g);
  require_minimum(f);
  if (bipartite_form) {
    const Bipartition bp = bipartition(g);
    if (!bp.bipartite()) throw InvalidArgument("bipartite form needs a bipartite graph");
    if (free_endpoint_side(f, x, bp) < 0 && 2 * f.path_count() > x.size()) {
      throw InvalidArgument("bipartite form needs End\\X inside one side");
    }
  }
  return component_bound_report(f, x, brute_component(f, x), d, bipartite_form);
}

CheckReport check_b0_and_doublecount(const LinearForest& f, const FixedEndpoints& x) {
  const int d = regular_degree(f.host());
  require_minimum(f);
  return doublecount_report(f.host(), analyse(f, brute_component(f, x)), d);
}

CheckReport check_fix_shrinkage(const LinearForest& f, const FixedEndpoints& x, Vertex v, Vertex u) {
  const Graph& g = f.host();
  require_minimum(f);
  if (!g.contains_vertex(v) || f.endpoint_multiplicity(v) <= x.count(v)) {
    throw InvalidArgument("check_fix_shrinkage: v is not a free endpoint");
  }
  const Analysis a = analyse(f, brute_component(f, x));
  const auto& b1 = a.b_class[1];
  if (!g.has_edge(u, v) || !std::binary_search(b1.begin(), b1.end(), u)) {
    throw InvalidArgument("check_fix_shrinkage: u is not a neighbour of v in B_1");
  }
  FixedEndpoints y = x;
  y.add(v);
  return shrinkage_report(g, a, v, u, brute_component(f, y).size());
}

std::size_t brute_shortest_tour(const Graph& g) {
  const Vertex n = g.n();
  if (n > 10) throw InvalidArgument("brute_shortest_tour needs n <= 10");
  if (!is_connected(g)) throw InvalidArgument("brute_shortest_tour: graph is disconnected");
  if (n <= 1) return 0;
  const std::uint32_t full = (1u << n) - 1;
  auto id = [&](Vertex v, std::uint32_t mask) { return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };
  std::vector<int> dist((static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(n), -1);
  std::deque<std::pair<Vertex, std::uint32_t>> queue;
  dist[id(0, 1)] = 0;
  queue.emplace_back(0, 1u);
  while (!queue.empty()) {
    const auto [v, mask] = queue.front();
    queue.pop_front();
    if (v == 0 && mask == full) return static_cast<std::size_t>(dist[id(v, mask)]);
    for (Vertex y : g.neighbors(v)) {
      const std::uint32_t next = mask | (1u << y);
      if (dist[id(y, next)] >= 0) continue;
      dist[id(y, next)] = dist[id(v, mask)] + 1;
      queue.emplace_back(y, next);
    }
  }
  throw InternalError("brute_shortest_tour: no closed covering walk");
}

std::vector<FixedEndpoints> sample_fixed_sets(const LinearForest& f, std::uint64_t seed, std::size_t samples) {
  std::vector<std::pair<Vertex, int>> ends;
  for (Vertex v = 0; v < f.n(); ++v) {
    if (f.endpoint_multiplicity(v) > 0) ends.emplace_back(v, f.endpoint_multiplicity(v));
  }
  std::set<std::vector<Vertex>> lists;
  if (2 * f.path_count() <= 6) {
    std::vector<int> pick(ends.size(), 0);
    while (true) {
      std::vector<Vertex> list;
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (int k = 0; k < pick[i]; ++k) list.push_back(ends[i].first);
      }
      lists.insert(std::move(list));
      std::size_t i = 0;
      while (i < ends.size() && pick[i] == ends[i].second) pick[i++] = 0;
      if (i == ends.size()) break;
      ++pick[i];
    }
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Vertex> list;
      for (const auto& [v, mult] : ends) {
        const auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(mult) + 1));
        for (int j = 0; j < k; ++j) list.push_back(v);
      }
      lists.insert(std::move(list));
    }
  }
  std::vector<FixedEndpoints> out;
  for (const auto& list : lists) out.emplace_back(f.n(), list);
  return out;
}

SweepSummary lemma_sweep(const std::vector<CorpusGraph>& graphs, std::uint64_t seed,
                         const std::function<void(const SweepRow&)>& row) {
  SweepSummary sum;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi].graph;
    const int d = regular_degree(g);
    ++sum.graphs;
    const Bipartition bp = bipartition(g);
    const auto forests = enumerate_min_forests(g);
    for (std::size_t fi = 0; fi < forests.size(); ++fi) {
      const LinearForest f = LinearForest::from_edges(g, forests[fi]);
      ++sum.forests;
      const auto fixed_sets = sample_fixed_sets(f, derive_seed(seed, gi * 1000003 + fi));
      for (const FixedEndpoints& x : fixed_sets) {
        ++sum.fixed_sets;
        auto emit = [&](CheckReport rep) {
          ++sum.checks;
          if (!rep.pass) ++sum.failures;
          if (row) row(SweepRow{graphs[gi].name, fi, x.to_list(), std::move(rep)});
        };
        const std::vector<Vertex> c = brute_component(f, x);
        const RotationComponent engine = component_exact(f, x, std::numeric_limits<std::size_t>::max());
        CheckReport eq;
        eq.lemma = "component_equivalence";
        eq.pass = engine.exact && engine.component == c;
        eq.values = {{"C_oracle", sz(c)}, {"C_engine", sz(engine.component)},
                     {"states", static_cast<long long>(engine.states_explored)}};
        emit(std::move(eq));

        emit(component_bound_report(f, x, c, d, false));
        if (bp.bipartite() && free_endpoint_side(f, x, bp) >= 0) emit(component_bound_report(f, x, c, d, true));
        const Analysis a = analyse(f, c);
        emit(doublecount_report(g, a, d));
        for (Vertex v = 0; v < g.n(); ++v) {
          if (f.endpoint_multiplicity(v) <= x.count(v)) continue;
          std::vector<Vertex> pivots;
          for (Vertex u : g.neighbors(v)) {
            if (std::binary_search(a.b_class[1].begin(), a.b_class[1].end(), u)) pivots.push_back(u);
          }
          if (pivots.empty()) continue;
          FixedEndpoints y = x;
          y.add(v);
          const std::size_t after = brute_component(f, y).size();
          for (Vertex u : pivots) emit(shrinkage_report(g, a, v, u, after));
        }
      }
    }
  }
  return sum;
}

}  // namespace linforest
