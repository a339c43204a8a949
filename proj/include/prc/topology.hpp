// Copyright 2026 The PermRowCol Authors
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

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prc {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple connectivity graph with unit edge weights.
///
/// Vertices keep their indices for the whole lifetime of the graph; removing a
/// vertex only marks it inactive and drops its edges, so vertex v always
/// stands for row v of the parity matrix being synthesized.
class Topology {
 public:
  Topology() = default;
  explicit Topology(std::size_t n);
  Topology(std::size_t n, std::span<const Edge> edges);

  static Topology line(std::size_t n);
  static Topology grid(std::size_t rows, std::size_t cols);
  static Topology complete(std::size_t n);

  /// Throws UsageError on self-loops, duplicates, or inactive endpoints.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  /// Total vertex count, active or not.
  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t active_count() const noexcept { return active_count_; }
  bool is_active(std::size_t v) const;
  std::vector<std::size_t> active_vertices() const;
  /// Active neighbours in ascending order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const;

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// True for the empty graph and for any single-component active subgraph.
  bool is_connected() const;

  /// Deactivates v and drops its edges. Throws UsageError if v is inactive or
  /// a cut vertex of the active subgraph.
  void remove_vertex(std::size_t v);

 private:
  void check_vertex(std::size_t v) const;
  bool connected_without(std::size_t skipped) const;

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> active_;
  std::size_t active_count_ = 0;
};

/// Copy of g with v removed.
Topology remove_vertex(Topology g, std::size_t v);

/// Active vertices whose removal keeps the active subgraph connected, in
/// ascending order. Throws UsageError for an empty or disconnected graph.
std::vector<std::size_t> non_cutting_vertices(const Topology& g);

/// Unit-weight all-pairs distances plus a next-hop table.
///
/// next_hop(u, v) is the lowest-indexed neighbour of u that lies on a
/// shortest u-v path, so every reconstructed path is deterministic.
class ShortestPaths {
 public:
  static constexpr std::size_t kUnreachable =
      std::numeric_limits<std::size_t>::max();

  explicit ShortestPaths(const Topology& g);

  std::size_t size() const noexcept { return n_; }
  std::size_t distance(std::size_t u, std::size_t v) const;
  std::size_t next_hop(std::size_t u, std::size_t v) const;
  /// Vertices from u to v inclusive. Throws UsageError if unreachable.
  std::vector<std::size_t> path(std::size_t u, std::size_t v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_;
};

/// Floyd-Warshall over the active subgraph.
ShortestPaths all_pairs_shortest_paths(const Topology& g);

/// Rooted tree over a subset of a topology's vertices.
class SteinerTree {
 public:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  SteinerTree() = default;
  SteinerTree(std::size_t n, std::size_t root);

  /// Builds a tree from explicit edges, oriented away from `root`. Throws
  /// UsageError unless the edges form a tree containing the root and every
  /// terminal.
  static SteinerTree from_edges(std::size_t n, std::size_t root,
                                std::span<const std::size_t> terminals,
                                std::span<const Edge> edges);

  std::size_t root() const noexcept { return root_; }
  std::size_t universe_size() const noexcept { return parent_.size(); }
  bool contains(std::size_t v) const;
  bool is_terminal(std::size_t v) const;
  std::size_t parent(std::size_t v) const;
  /// Children of v in ascending order.
  std::vector<std::size_t> children(std::size_t v) const;
  std::vector<std::size_t> vertices() const;
  std::vector<std::size_t> terminals() const;

  /// (parent, child) pairs, ascending by child.
  std::vector<Edge> edges() const;
  std::size_t weight() const;

  /// Pre-order edge list: each (parent, child) before the child's subtree.
  std::vector<Edge> top_down_edges() const;
  /// Post-order edge list: each (parent, child) after the child's subtree.
  std::vector<Edge> bottom_up_edges() const;

  void add_child(std::size_t parent, std::size_t child);
  void mark_terminal(std::size_t v);

 private:
  void walk(std::size_t v, std::vector<Edge>& pre, std::vector<Edge>& post) const;

  std::size_t root_ = kNone;
  std::vector<std::size_t> parent_;
  std::vector<bool> member_;
  std::vector<bool> terminal_;
};

/// Approximate Steiner tree rooted at `root` spanning `terminals`.
///
/// Prim's algorithm over the metric closure: repeatedly connect the terminal
/// closest to the current tree, adding its whole shortest path. Ties go to the
/// lower terminal index, then the lower tree vertex.
SteinerTree steiner_tree(const Topology& g, std::size_t root,
                         std::span<const std::size_t> terminals);
SteinerTree steiner_tree(const Topology& g, const ShortestPaths& paths,
                         std::size_t root,
                         std::span<const std::size_t> terminals);

struct TopologyStats {
  /// Sum of d(u, v) over all ordered pairs, self-pairs included, over n^2.
  double mean_distance = 0;
  double mean_degree = 0;
};
TopologyStats topology_stats(const Topology& g);

/// Catalog of named device graphs. Throws UsageError for unknown names, with
/// the catalog in the message.
Topology builtin_topology(std::string_view name);
std::vector<std::string> builtin_topology_names();

}  // namespace prc
