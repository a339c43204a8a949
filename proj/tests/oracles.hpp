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

// Slow, obviously-correct reference computations used to check the library.
// Nothing here calls into the algorithm under test except where noted.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "prc/parity.hpp"
#include "prc/synthesis.hpp"
#include "prc/topology.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;
inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

inline Dense to_dense(const prc::ParityMatrix& m) {
  Dense d(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m.get(i, j);
  }
  return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < n; ++k) s ^= a[i][k] & b[k][j];
      c[i][j] = s;
    }
  return c;
}

// Wire-by-wire simulation: wire[j] is the set of inputs XORed onto wire j;
// column j of the result is that set.
inline Dense simulate(const prc::CnotCircuit& c) {
  const std::size_t n = c.n_qubits();
  std::vector<std::vector<int>> wire(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) wire[i][i] = 1;
  for (const auto& g : c.gates()) {
    for (std::size_t k = 0; k < n; ++k) wire[g.target][k] ^= wire[g.control][k];
  }
  Dense d(n, std::vector<int>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) d[i][j] = wire[j][i];
  return d;
}

// Original == Q * routed * P^T with Q[placement[r]][r] = P[map[r]][r] = 1,
// written out as wire bookkeeping instead of matrix products: the routed
// circuit run on inputs placed by `placement` must leave logical wire
// map[r] on register r.
inline bool equivalent(const prc::CnotCircuit& original,
                       const prc::CnotCircuit& routed,
                       const std::vector<std::size_t>& map,
                       const std::vector<std::size_t>& placement) {
  const Dense want = simulate(original);
  const Dense got = simulate(routed);
  const std::size_t n = want.size();
  for (std::size_t r = 0; r < n; ++r) {      // output register
    for (std::size_t k = 0; k < n; ++k) {    // input register
      if (got[k][r] != want[placement[k]][map[r]]) return false;
    }
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> bfs_distances(const prc::Topology& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t s = 0; s < n; ++s) {
    if (!g.is_active(s)) continue;
    dist[s][s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (g.is_active(v) && g.has_edge(u, v) && dist[s][v] == kInf) {
          dist[s][v] = dist[s][u] + 1;
          q.push_back(v);
        }
      }
    }
  }
  return dist;
}

// Connectivity of the vertex set `mask` using only edges inside it.
inline bool mask_connected(const prc::Topology& g, std::uint64_t mask) {
  if (mask == 0) return true;
  const std::size_t start = std::countr_zero(mask);
  std::uint64_t seen = std::uint64_t{1} << start;
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < g.size(); ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((mask & bit) && !(seen & bit) && g.has_edge(u, v)) {
        seen |= bit;
        stack.push_back(v);
      }
    }
  }
  return seen == mask;
}

inline std::vector<std::size_t> brute_force_non_cutting(const prc::Topology& g) {
  std::uint64_t all = 0;
  for (std::size_t v : g.active_vertices()) all |= std::uint64_t{1} << v;
  std::vector<std::size_t> out;
  for (std::size_t v : g.active_vertices()) {
    if (mask_connected(g, all & ~(std::uint64_t{1} << v))) out.push_back(v);
  }
  return out;
}

// best[T] = minimum edges of a tree containing terminal set T, for every T.
// A tree on k vertices has k - 1 edges, so this is the smallest connected
// superset of T minus one. Vertex count must be small (2^n table).
inline std::vector<std::size_t> exact_steiner_weights(const prc::Topology& g) {
  const std::size_t n = g.size();
  const std::uint64_t full = std::uint64_t{1} << n;
  std::vector<std::size_t> best(full, kInf);
  for (std::uint64_t s = 1; s < full; ++s) {
    if (mask_connected(g, s)) best[s] = std::popcount(s) - 1;
  }
  best[0] = 0;
  // Minimum over supersets, one bit at a time.
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t s = 0; s < full; ++s) {
      if (!(s & bit)) best[s] = std::min(best[s], best[s | bit]);
    }
  }
  return best;
}

inline prc::Topology random_connected_graph(std::size_t n, double p,
                                            std::mt19937_64& rng) {
  prc::Topology g(n);
  // Random spanning tree first, then extra edges.
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v, rng() % v);
  std::bernoulli_distribution extra(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && extra(rng)) g.add_edge(u, v);
  return g;
}

// Fewest CNOTs on the edges of g (either direction) taking the identity to
// `target`, found by breadth-first search over parity matrices.
inline std::size_t optimal_cnot_count(const prc::ParityMatrix& target,
                                      const prc::Topology& g) {
  const std::size_t n = target.size();
  auto key = [n](const prc::ParityMatrix& m) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k = (k << 1) | m.get(i, j);
    return k;
  };
  std::map<std::uint64_t, std::size_t> depth;
  std::deque<prc::ParityMatrix> q{prc::ParityMatrix::identity(n)};
  depth[key(q.front())] = 0;
  const auto target_key = key(target);
  while (!q.empty()) {
    const prc::ParityMatrix m = q.front();
    q.pop_front();
    const std::size_t d = depth[key(m)];
    if (key(m) == target_key) return d;
    for (const auto& [u, v] : g.edges()) {
      for (auto [c, t] : {std::pair{u, v}, std::pair{v, u}}) {
        // Appending CNOT(c, t) adds column c into column t.
        prc::ParityMatrix next = m;
        for (std::size_t i = 0; i < n; ++i) {
          if (m.get(i, c)) next.set(i, t, !m.get(i, t));
        }
        if (depth.emplace(key(next), d + 1).second) q.push_back(next);
      }
    }
  }
  return kInf;
}

// Cheapest result over every pivot sequence, by exhaustive recursion. Uses
// SynthesisState only to perform single rounds.
inline std::size_t best_over_pivot_orders(const prc::SynthesisState& state) {
  if (state.done()) return state.gate_count();
  std::size_t best = kInf;
  for (std::size_t row : state.candidate_rows()) {
    for (std::size_t col : state.eligible_columns(row)) {
      prc::SynthesisState next = state;
      next.eliminate(row, col);
      best = std::min(best, best_over_pivot_orders(next));
    }
  }
  return best;
}

inline prc::CnotCircuit random_circuit(std::size_t n, std::size_t d,
                                       std::mt19937_64& rng) {
  prc::CnotCircuit c(n);
  while (c.size() < d) {
    const std::size_t a = rng() % n, b = rng() % n;
    if (a != b) c.add_cnot(a, b);
  }
  return c;
}

// Converts 1-based (control, target) pairs.
inline std::vector<prc::Cnot> one_based(
    std::initializer_list<std::pair<std::size_t, std::size_t>> gates) {
  std::vector<prc::Cnot> out;
  for (auto [c, t] : gates) out.push_back({c - 1, t - 1});
  return out;
}

}  // namespace oracle
