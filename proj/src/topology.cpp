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

#include "prc/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "prc/errors.hpp"

namespace prc {

Topology::Topology(std::size_t n)
    : adjacency_(n), active_(n, true), active_count_(n) {}

Topology::Topology(std::size_t n, std::span<const Edge> edges) : Topology(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Topology Topology::line(std::size_t n) {
  Topology g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Topology Topology::grid(std::size_t rows, std::size_t cols) {
  Topology g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Topology Topology::complete(std::size_t n) {
  Topology g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

void Topology::check_vertex(std::size_t v) const {
  if (v >= adjacency_.size()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for a " +
                     std::to_string(adjacency_.size()) + "-vertex topology");
  }
}

void Topology::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw UsageError("self-loop on vertex " + std::to_string(u));
  if (!active_[u] || !active_[v]) {
    throw UsageError("edge endpoint is not an active vertex");
  }
  if (has_edge(u, v)) {
    throw UsageError("duplicate edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  }
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

bool Topology::has_edge(std::size_t u, std::size_t v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

bool Topology::is_active(std::size_t v) const {
  return v < active_.size() && active_[v];
}

std::vector<std::size_t> Topology::active_vertices() const {
  std::vector<std::size_t> out;
  out.reserve(active_count_);
  for (std::size_t v = 0; v < active_.size(); ++v) {
    if (active_[v]) out.push_back(v);
  }
  return out;
}

const std::vector<std::size_t>& Topology::neighbors(std::size_t v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<Edge> Topology::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Topology::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

bool Topology::connected_without(std::size_t skipped) const {
  std::size_t start = adjacency_.size();
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    if (active_[v] && v != skipped) {
      start = v;
      break;
    }
  }
  if (start == adjacency_.size()) return true;

  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency_[v]) {
      if (w == skipped || seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  const std::size_t expected =
      active_count_ - (skipped < active_.size() && active_[skipped] ? 1 : 0);
  return reached == expected;
}

bool Topology::is_connected() const {
  return connected_without(adjacency_.size());
}

void Topology::remove_vertex(std::size_t v) {
  check_vertex(v);
  if (!active_[v]) {
    throw UsageError("vertex " + std::to_string(v) + " was already removed");
  }
  if (!connected_without(v)) {
    throw UsageError("vertex " + std::to_string(v) +
                     " is a cut vertex; removing it disconnects the topology");
  }
  for (std::size_t w : adjacency_[v]) {
    auto& list = adjacency_[w];
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }
  adjacency_[v].clear();
  active_[v] = false;
  --active_count_;
}

Topology remove_vertex(Topology g, std::size_t v) {
  g.remove_vertex(v);
  return g;
}

// Articulation points via the DFS low-link method.
std::vector<std::size_t> non_cutting_vertices(const Topology& g) {
  const auto active = g.active_vertices();
  if (active.empty()) throw UsageError("topology has no active vertices");
  if (!g.is_connected()) throw UsageError("topology is disconnected");
  if (active.size() == 1) return active;

  const std::size_t n = g.size();
  constexpr std::size_t kUnseen = SteinerTree::kNone;
  std::vector<std::size_t> order(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> cut(n, false);
  std::size_t clock = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t parent;
    std::size_t next_neighbor;
  };
  const std::size_t root = active.front();
  std::size_t root_children = 0;
  std::vector<Frame> stack{{root, kUnseen, 0}};
  order[root] = low[root] = clock++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto& nbrs = g.neighbors(top.vertex);
    if (top.next_neighbor < nbrs.size()) {
      const std::size_t w = nbrs[top.next_neighbor++];
      if (order[w] == kUnseen) {
        order[w] = low[w] = clock++;
        if (top.vertex == root) ++root_children;
        stack.push_back({w, top.vertex, 0});
      } else if (w != top.parent) {
        low[top.vertex] = std::min(low[top.vertex], order[w]);
      }
      continue;
    }
    const Frame done = top;
    stack.pop_back();
    if (stack.empty()) break;
    const std::size_t parent = stack.back().vertex;
    low[parent] = std::min(low[parent], low[done.vertex]);
    if (parent != root && low[done.vertex] >= order[parent]) cut[parent] = true;
  }
  if (root_children > 1) cut[root] = true;

  std::vector<std::size_t> out;
  for (std::size_t v : active) {
    if (!cut[v]) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

ShortestPaths::ShortestPaths(const Topology& g)
    : n_(g.size()),
      dist_(n_ * n_, kUnreachable),
      next_(n_ * n_, kUnreachable) {
  const auto active = g.active_vertices();
  for (std::size_t v : active) {
    dist_[v * n_ + v] = 0;
    for (std::size_t w : g.neighbors(v)) dist_[v * n_ + w] = 1;
  }
  for (std::size_t k : active) {
    for (std::size_t i : active) {
      const std::size_t ik = dist_[i * n_ + k];
      if (ik == kUnreachable) continue;
      for (std::size_t j : active) {
        const std::size_t kj = dist_[k * n_ + j];
        if (kj == kUnreachable) continue;
        if (ik + kj < dist_[i * n_ + j]) dist_[i * n_ + j] = ik + kj;
      }
    }
  }
  for (std::size_t u : active) {
    next_[u * n_ + u] = u;
    for (std::size_t v : active) {
      const std::size_t d = dist_[u * n_ + v];
      if (u == v || d == kUnreachable) continue;
      // Neighbours are sorted, so the first hit is the lowest index.
      for (std::size_t w : g.neighbors(u)) {
        if (dist_[w * n_ + v] + 1 == d) {
          next_[u * n_ + v] = w;
          break;
        }
      }
    }
  }
}

std::size_t ShortestPaths::distance(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw UsageError("vertex out of range");
  return dist_[u * n_ + v];
}

std::size_t ShortestPaths::next_hop(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw UsageError("vertex out of range");
  return next_[u * n_ + v];
}

std::vector<std::size_t> ShortestPaths::path(std::size_t u, std::size_t v) const {
  if (distance(u, v) == kUnreachable) {
    throw UsageError("no path between " + std::to_string(u) + " and " +
                     std::to_string(v));
  }
  std::vector<std::size_t> out{u};
  while (u != v) {
    u = next_[u * n_ + v];
    out.push_back(u);
  }
  return out;
}

ShortestPaths all_pairs_shortest_paths(const Topology& g) {
  return ShortestPaths(g);
}

// ---------------------------------------------------------------------------

SteinerTree::SteinerTree(std::size_t n, std::size_t root)
    : root_(root), parent_(n, kNone), member_(n, false), terminal_(n, false) {
  if (root >= n) throw UsageError("tree root out of range");
  member_[root] = true;
}

SteinerTree SteinerTree::from_edges(std::size_t n, std::size_t root,
                                    std::span<const std::size_t> terminals,
                                    std::span<const Edge> edges) {
  SteinerTree tree(n, root);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw UsageError("bad tree edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> stack{root};
  std::size_t attached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (w == tree.parent_[v]) continue;
      if (tree.member_[w]) throw UsageError("tree edges contain a cycle");
      tree.add_child(v, w);
      ++attached;
      stack.push_back(w);
    }
  }
  if (attached != edges.size()) {
    throw UsageError("tree edges are not connected to the root");
  }
  for (std::size_t t : terminals) tree.mark_terminal(t);
  return tree;
}

bool SteinerTree::contains(std::size_t v) const {
  return v < member_.size() && member_[v];
}

bool SteinerTree::is_terminal(std::size_t v) const {
  return v < terminal_.size() && terminal_[v];
}

std::size_t SteinerTree::parent(std::size_t v) const {
  return v < parent_.size() ? parent_[v] : kNone;
}

std::vector<std::size_t> SteinerTree::children(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < parent_.size(); ++w) {
    if (parent_[w] == v) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> SteinerTree::vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> SteinerTree::terminals() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < terminal_.size(); ++v) {
    if (terminal_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> SteinerTree::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] != kNone) out.emplace_back(parent_[v], v);
  }
  return out;
}

std::size_t SteinerTree::weight() const { return edges().size(); }

void SteinerTree::walk(std::size_t v, std::vector<Edge>& pre,
                       std::vector<Edge>& post) const {
  for (std::size_t child : children(v)) {
    pre.emplace_back(v, child);
    walk(child, pre, post);
    post.emplace_back(v, child);
  }
}

std::vector<Edge> SteinerTree::top_down_edges() const {
  std::vector<Edge> pre, post;
  if (root_ != kNone) walk(root_, pre, post);
  return pre;
}

std::vector<Edge> SteinerTree::bottom_up_edges() const {
  std::vector<Edge> pre, post;
  if (root_ != kNone) walk(root_, pre, post);
  return post;
}

void SteinerTree::add_child(std::size_t parent, std::size_t child) {
  if (!contains(parent) || child >= member_.size() || member_[child]) {
    throw UsageError("invalid tree extension " + std::to_string(parent) +
                     " -> " + std::to_string(child));
  }
  member_[child] = true;
  parent_[child] = parent;
}

void SteinerTree::mark_terminal(std::size_t v) {
  if (!contains(v)) {
    throw UsageError("terminal " + std::to_string(v) + " is not in the tree");
  }
  terminal_[v] = true;
}

SteinerTree steiner_tree(const Topology& g, std::size_t root,
                         std::span<const std::size_t> terminals) {
  return steiner_tree(g, ShortestPaths(g), root, terminals);
}

SteinerTree steiner_tree(const Topology& g, const ShortestPaths& paths,
                         std::size_t root,
                         std::span<const std::size_t> terminals) {
  if (!g.is_active(root)) {
    throw UsageError("Steiner root " + std::to_string(root) + " is not active");
  }
  for (std::size_t t : terminals) {
    if (!g.is_active(t)) {
      throw UsageError("terminal " + std::to_string(t) + " is not active");
    }
  }
  SteinerTree tree(g.size(), root);
  std::vector<std::size_t> members{root};
  std::vector<std::size_t> pending(terminals.begin(), terminals.end());
  std::sort(pending.begin(), pending.end());
  pending.erase(std::unique(pending.begin(), pending.end()), pending.end());

  while (true) {
    pending.erase(std::remove_if(pending.begin(), pending.end(),
                                 [&](std::size_t t) { return tree.contains(t); }),
                  pending.end());
    if (pending.empty()) break;
    // (distance, terminal, attach point), minimised lexicographically.
    std::tuple<std::size_t, std::size_t, std::size_t> best{
        ShortestPaths::kUnreachable, 0, 0};
    for (std::size_t t : pending) {
      for (std::size_t m : members) {
        const std::tuple candidate{paths.distance(m, t), t, m};
        if (candidate < best) best = candidate;
      }
    }
    const auto [d, terminal, attach] = best;
    if (d == ShortestPaths::kUnreachable) {
      throw UsageError("terminal " + std::to_string(terminal) +
                       " is unreachable from the tree");
    }
    const auto route = paths.path(attach, terminal);
    for (std::size_t i = 1; i < route.size(); ++i) {
      tree.add_child(route[i - 1], route[i]);
      members.push_back(route[i]);
    }
  }
  for (std::size_t t : terminals) tree.mark_terminal(t);
  return tree;
}

TopologyStats topology_stats(const Topology& g) {
  const auto active = g.active_vertices();
  if (active.empty()) return {};
  const ShortestPaths paths(g);
  double total = 0;
  for (std::size_t u : active) {
    for (std::size_t v : active) {
      const std::size_t d = paths.distance(u, v);
      if (d == ShortestPaths::kUnreachable) {
        throw UsageError("topology is disconnected");
      }
      total += static_cast<double>(d);
    }
  }
  const double n = static_cast<double>(active.size());
  return {total / (n * n), 2.0 * static_cast<double>(g.edge_count()) / n};
}

// ---------------------------------------------------------------------------

namespace {

Topology from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return Topology(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Topology ibm_qx2() {
  return from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// 16-qubit ladder, edges as in the device's published coupling map.
Topology ibm_qx5() {
  return from_edge_list(
      16, {{1, 0},   {1, 2},   {2, 3},   {3, 4},   {3, 14},  {5, 4},
           {6, 5},   {6, 11},  {6, 7},   {7, 10},  {8, 7},   {9, 8},
           {9, 10},  {11, 10}, {12, 5},  {12, 11}, {12, 13}, {13, 4},
           {13, 14}, {15, 0},  {15, 14}, {15, 2}});
}

// 4x5 lattice with crossed couplers in alternating plaquettes.
Topology ibm_tokyo() {
  Topology g = Topology::grid(4, 5);
  for (const auto& [u, v] : std::initializer_list<Edge>{
           {1, 7}, {2, 6}, {3, 9}, {4, 8}, {5, 11}, {6, 10},
           {7, 13}, {8, 12}, {11, 17}, {12, 16}, {13, 19}, {14, 18}}) {
    g.add_edge(u, v);
  }
  return g;
}

// Two octagons joined by two couplers.
Topology rigetti_aspen() {
  Topology g(16);
  for (std::size_t ring = 0; ring < 2; ++ring) {
    for (std::size_t i = 0; i < 8; ++i) {
      g.add_edge(ring * 8 + i, ring * 8 + (i + 1) % 8);
    }
  }
  g.add_edge(1, 14);
  g.add_edge(2, 13);
  return g;
}

const std::map<std::string, std::function<Topology()>, std::less<>>& catalog() {
  static const std::map<std::string, std::function<Topology()>, std::less<>>
      entries{
          {"line3", [] { return Topology::line(3); }},
          {"line5", [] { return Topology::line(5); }},
          {"square9", [] { return Topology::grid(3, 3); }},
          {"square16", [] { return Topology::grid(4, 4); }},
          {"complete5", [] { return Topology::complete(5); }},
          {"complete9", [] { return Topology::complete(9); }},
          {"complete16", [] { return Topology::complete(16); }},
          {"complete20", [] { return Topology::complete(20); }},
          {"ibm_qx2", ibm_qx2},
          {"ibm_qx4", ibm_qx2},
          {"ibm_qx5", ibm_qx5},
          {"ibm_tokyo", ibm_tokyo},
          {"rigetti_aspen", rigetti_aspen},
          {"grid2x3", [] { return Topology::grid(2, 3); }},
      };
  return entries;
}

}  // namespace

Topology builtin_topology(std::string_view name) {
  const auto& entries = catalog();
  const auto it = entries.find(name);
  if (it == entries.end()) {
    std::string known;
    for (const auto& [key, _] : entries) known += (known.empty() ? "" : ", ") + key;
    throw UsageError("unknown topology '" + std::string(name) +
                     "'; known: " + known);
  }
  return it->second();
}

std::vector<std::string> builtin_topology_names() {
  std::vector<std::string> names;
  for (const auto& [key, _] : catalog()) names.push_back(key);
  return names;
}

}  // namespace prc
