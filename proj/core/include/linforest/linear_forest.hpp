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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linforest/graph.hpp"

namespace linforest {

/// 128-bit Zobrist fingerprint of a forest's edge set (XOR of per-edge keys).
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  Fingerprint& operator^=(const Fingerprint& o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept {
    return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ULL));
  }
};

Fingerprint edge_fingerprint(Vertex a, Vertex b);

/// Rotate `old_endpoint` to `new_endpoint` using `pivot`: the forest loses
/// the edge pivot–new_endpoint and gains pivot–old_endpoint.
struct RotationMove {
  Vertex old_endpoint = kNoVertex;
  Vertex pivot = kNoVertex;
  Vertex new_endpoint = kNoVertex;

  friend auto operator<=>(const RotationMove&, const RotationMove&) = default;
  friend bool operator==(const RotationMove&, const RotationMove&) = default;
};

/// Multiset of endpoints that rotations may not move. Multiplicity per
/// vertex is 0, 1 or 2. A default-constructed value is the empty multiset.
class FixedEndpoints {
 public:
  FixedEndpoints() = default;
  explicit FixedEndpoints(Vertex n) : count_(static_cast<std::size_t>(n), 0) {}
  FixedEndpoints(Vertex n, std::span<const Vertex> vertices);

  int count(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return i < count_.size() ? count_[i] : 0;
  }
  void add(Vertex v);
  std::size_t size() const { return total_; }
  bool empty() const { return total_ == 0; }

  /// Sorted, with repetition.
  std::vector<Vertex> to_list() const;

  friend bool operator==(const FixedEndpoints& a, const FixedEndpoints& b) {
    return a.to_list() == b.to_list();
  }

 private:
  std::vector<std::uint8_t> count_;
  std::size_t total_ = 0;
};

/// Spanning linear forest of a host graph.
///
/// Every vertex lies on exactly one path; isolated vertices are paths of
/// length zero and appear twice in End(F). Each path carries an id and each
/// vertex its position along the path, so "same path" and "closer to v"
/// queries are O(1). Mutations relabel only the paths they touch.
///
/// The host graph must outlive the forest.
class LinearForest {
 public:
  /// All vertices isolated.
  explicit LinearForest(const Graph& host);

  /// Validates degree <= 2, acyclicity and membership in the host.
  static LinearForest from_edges(const Graph& host, std::span<const Edge> edges);

  const Graph& host() const { return *host_; }
  Vertex n() const { return static_cast<Vertex>(nbr_.size()); }

  int degree(Vertex v) const;
  /// Path-neighbours, padded with kNoVertex.
  const std::array<Vertex, 2>& forest_neighbors(Vertex v) const {
    return nbr_[static_cast<std::size_t>(v)];
  }
  bool has_edge(Vertex a, Vertex b) const;

  /// 2 for an isolated vertex, 1 for a path end, 0 for an interior vertex.
  int endpoint_multiplicity(Vertex v) const { return 2 - degree(v); }
  bool is_endpoint(Vertex v) const { return degree(v) < 2; }
  /// End(F) as a sorted multiset.
  std::vector<Vertex> end_multiset() const;

  std::size_t path_count() const { return paths_; }
  std::size_t edge_count() const { return nbr_.size() - paths_; }

  int path_of(Vertex v) const { return path_id_[static_cast<std::size_t>(v)]; }
  int position(Vertex v) const { return pos_[static_cast<std::size_t>(v)]; }
  bool same_path(Vertex a, Vertex b) const { return path_of(a) == path_of(b); }
  /// The other end of the path whose end is `endpoint` (itself if isolated).
  Vertex other_end(Vertex endpoint) const;
  /// Both ends of the path through v (equal for an isolated vertex).
  std::pair<Vertex, Vertex> path_ends(Vertex v) const {
    const auto id = static_cast<std::size_t>(path_of(v));
    return {head_[id], tail_[id]};
  }

  /// Sorted edge list.
  std::vector<Edge> edges() const;
  /// Paths oriented from the smaller end, sorted lexicographically.
  std::vector<std::vector<Vertex>> paths() const;

  const Fingerprint& fingerprint() const { return fingerprint_; }

  /// Why `mv` is not a rotation of this forest, or nullopt if it is.
  /// The no-op (v, u, v) with uv a forest edge is accepted.
  std::optional<std::string> rotation_error(const RotationMove& mv) const;
  bool is_valid_rotation(const RotationMove& mv) const { return !rotation_error(mv); }

  /// In-place rotation; throws InvalidArgument on an invalid move.
  void rotate(const RotationMove& mv);
  /// Rotation without validation, for search engines that generate moves.
  void rotate_unchecked(const RotationMove& mv);

  /// In-place merge of two paths by the host edge ab (a, b endpoints of
  /// distinct paths); throws InvalidArgument otherwise.
  void merge(Vertex a, Vertex b);

  friend bool operator==(const LinearForest& a, const LinearForest& b) {
    return a.host_ == b.host_ && a.edges() == b.edges();
  }

 private:
  void add_edge_raw(Vertex a, Vertex b);
  void remove_edge_raw(Vertex a, Vertex b);
  void relayout(Vertex start, int id);

  const Graph* host_;
  std::vector<std::array<Vertex, 2>> nbr_;
  std::vector<int> path_id_;
  std::vector<int> pos_;
  std::vector<Vertex> head_;
  std::vector<Vertex> tail_;
  std::vector<int> free_ids_;
  std::size_t paths_ = 0;
  Fingerprint fingerprint_;
};

/// All vertices isolated: n paths, End(F) holds every vertex twice.
LinearForest trivial_forest(const Graph& g);

/// Randomized greedy path growing: repeatedly start a path at a random
/// uncovered vertex and extend both of its ends through random uncovered
/// neighbours until stuck.
LinearForest greedy_path_cover(const Graph& g, std::uint64_t seed);

LinearForest apply_rotation(const LinearForest& f, const RotationMove& mv);

/// Non-trivial rotations whose old endpoint still has a rotatable copy
/// (multiplicity in End(F) exceeds multiplicity in x), sorted by (v, u, w).
std::vector<RotationMove> enumerate_rotations(const LinearForest& f, const FixedEndpoints& x = {});
void enumerate_rotations_into(const LinearForest& f, const FixedEndpoints& x,
                              std::vector<RotationMove>& out);

LinearForest merge_paths(const LinearForest& f, Vertex u, Vertex v);

/// Keeps the forest edges that are edges of `original`, whose vertices must
/// be a prefix of f's host.
LinearForest restrict_forest(const LinearForest& f, const Graph& original);

/// One "path v1 v2 ... vk" line per path, in paths() order.
std::string format_forest(const LinearForest& f);
LinearForest parse_forest(const Graph& host, std::string_view text);

}  // namespace linforest
