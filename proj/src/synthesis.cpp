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

#include "prc/synthesis.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "prc/errors.hpp"

namespace prc {

namespace {

void check_tree_edges(const Topology& g, const SteinerTree& tree) {
  if (tree.universe_size() != g.size()) {
    throw UsageError("Steiner tree and topology sizes differ");
  }
  if (!g.is_active(tree.root())) {
    throw UsageError("tree root " + std::to_string(tree.root()) +
                     " is not an active vertex");
  }
  for (const auto& [parent, child] : tree.edges()) {
    if (!g.has_edge(parent, child)) {
      throw UsageError("tree edge " + std::to_string(parent) + "-" +
                       std::to_string(child) + " is not in the topology");
    }
  }
}

}  // namespace

std::size_t choose_row(const ParityMatrix& m,
                       std::span<const std::size_t> candidates, RowRule rule) {
  if (candidates.empty()) throw UsageError("no candidate rows");
  if (rule == RowRule::kLowestIndex) {
    return *std::min_element(candidates.begin(), candidates.end());
  }
  // Eliminated columns are zero on every live row, so the full row weight
  // equals the weight over the remaining columns.
  std::pair<std::size_t, std::size_t> best{m.row_weight(candidates[0]),
                                           candidates[0]};
  for (std::size_t row : candidates.subspan(1)) {
    best = std::min(best, std::pair{m.row_weight(row), row});
  }
  return best.second;
}

std::size_t choose_column(const ParityMatrix& m, std::size_t pivot_row,
                          std::span<const std::size_t> candidates,
                          ColumnRule rule) {
  bool found = false;
  std::pair<std::size_t, std::size_t> best{};
  for (std::size_t col : candidates) {
    if (!m.get(pivot_row, col)) continue;
    const std::size_t key = rule == ColumnRule::kMinWeight ? m.column_weight(col) : 0;
    const std::pair candidate{key, col};
    if (!found || candidate < best) best = candidate;
    found = true;
  }
  if (!found) {
    throw InternalError("row " + std::to_string(pivot_row) +
                        " has no 1 in any unassigned column");
  }
  return best.second;
}

std::vector<Cnot> eliminate_column(ParityMatrix& m, const Topology& g,
                                   const SteinerTree& tree,
                                   std::size_t pivot_col) {
  check_tree_edges(g, tree);
  if (pivot_col >= m.size() || tree.universe_size() != m.size()) {
    throw UsageError("pivot column or tree does not fit the matrix");
  }
  const std::size_t root = tree.root();
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (v != root && m.get(v, pivot_col) != tree.is_terminal(v)) {
      throw UsageError("tree terminals must be the rows with a 1 in column " +
                       std::to_string(pivot_col) + " (row " +
                       std::to_string(v) + " disagrees)");
    }
  }

  ParityMatrix work = m;
  std::vector<Cnot> gates;
  const auto edges = tree.bottom_up_edges();
  // Fill Steiner nodes (and a zero root) with ones from below.
  for (const auto& [parent, child] : edges) {
    if (!work.get(parent, pivot_col)) {
      gates.push_back({parent, child});
      work.add_row(child, parent);
    }
  }
  // Clear everything below the root.
  for (const auto& [parent, child] : edges) {
    gates.push_back({child, parent});
    work.add_row(parent, child);
  }

  for (std::size_t v = 0; v < work.size(); ++v) {
    if (work.get(v, pivot_col) != (v == root)) {
      throw UsageError("Steiner tree does not reduce column " +
                       std::to_string(pivot_col));
    }
  }
  m = std::move(work);
  return gates;
}

std::vector<Cnot> eliminate_row(ParityMatrix& m, const Topology& g,
                                const SteinerTree& tree,
                                std::size_t pivot_row) {
  check_tree_edges(g, tree);
  if (tree.root() != pivot_row || pivot_row >= m.size() ||
      tree.universe_size() != m.size()) {
    throw UsageError("row elimination tree must be rooted at the pivot row");
  }

  ParityMatrix work = m;
  std::vector<Cnot> gates;
  for (const auto& [parent, child] : tree.top_down_edges()) {
    if (!tree.is_terminal(child)) {
      gates.push_back({parent, child});
      work.add_row(child, parent);
    }
  }
  for (const auto& [parent, child] : tree.bottom_up_edges()) {
    gates.push_back({parent, child});
    work.add_row(child, parent);
  }

  if (!work.is_basis_row(pivot_row)) {
    throw UsageError("tree terminals do not reduce row " +
                     std::to_string(pivot_row) + " to a basis vector");
  }
  m = std::move(work);
  return gates;
}

// ---------------------------------------------------------------------------

SynthesisState::SynthesisState(const ParityMatrix& m, const Topology& g)
    : matrix_(m), graph_(g), map_(m.size()), circuit_(m.size()) {
  if (g.size() != m.size()) {
    throw UsageError("matrix is " + std::to_string(m.size()) + "x" +
                     std::to_string(m.size()) + " but the topology has " +
                     std::to_string(g.size()) + " vertices");
  }
  if (g.active_count() != g.size()) {
    throw UsageError("synthesis needs a topology with every vertex active");
  }
  if (!g.is_connected()) throw UsageError("topology is disconnected");
  if (!m.is_invertible()) throw UsageError("parity matrix is not invertible");
}

const ShortestPaths& SynthesisState::paths() {
  if (!paths_) paths_.emplace(graph_);
  return *paths_;
}

std::vector<std::size_t> SynthesisState::candidate_rows() const {
  return non_cutting_vertices(graph_);
}

std::vector<std::size_t> SynthesisState::unassigned_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < map_.size(); ++c) {
    if (map_.register_of(c) == QubitMap::kUnassigned) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> SynthesisState::eligible_columns(std::size_t row) const {
  std::vector<std::size_t> out;
  for (std::size_t c : unassigned_columns()) {
    if (matrix_.get(row, c)) out.push_back(c);
  }
  return out;
}

void SynthesisState::eliminate(std::size_t row, std::size_t col) {
  if (done()) throw UsageError("synthesis is already complete");
  if (!graph_.is_active(row)) {
    throw UsageError("pivot row " + std::to_string(row) + " is not active");
  }
  if (col >= map_.size() || map_.register_of(col) != QubitMap::kUnassigned) {
    throw UsageError("pivot column " + std::to_string(col) +
                     " is out of range or already assigned");
  }
  // Throws before anything is touched if `row` is a cut vertex.
  Topology remaining = remove_vertex(graph_, row);

  EliminationStep step{row, col, {}, {}};
  std::vector<std::size_t> terminals;
  for (std::size_t v : graph_.active_vertices()) {
    if (matrix_.get(v, col)) terminals.push_back(v);
  }
  const SteinerTree column_tree = steiner_tree(graph_, paths(), row, terminals);
  step.column_gates = eliminate_column(matrix_, graph_, column_tree, col);

  if (matrix_.row_weight(row) > 1) {
    std::vector<std::size_t> nodes{row};
    for (std::size_t v : solve_row_dependencies(matrix_, row, col)) {
      if (!graph_.is_active(v)) {
        throw InternalError("row " + std::to_string(v) +
                            " was already eliminated but is needed again");
      }
      nodes.push_back(v);
    }
    const SteinerTree row_tree = steiner_tree(graph_, paths(), row, nodes);
    step.row_gates = eliminate_row(matrix_, graph_, row_tree, row);
  }
  if (!matrix_.is_basis_column(col) || !matrix_.get(row, col)) {
    throw InternalError("pivot column was disturbed by row elimination");
  }

  circuit_.append(step.column_gates);
  circuit_.append(step.row_gates);
  map_.assign(row, col);
  steps_.push_back(std::move(step));
  graph_ = std::move(remaining);
  paths_.reset();
}

SynthesisResult SynthesisState::finish() && {
  if (!done()) throw UsageError("synthesis has rows left to eliminate");
  const auto last_rows = graph_.active_vertices();
  const auto last_cols = unassigned_columns();
  if (last_rows.size() != last_cols.size()) {
    throw InternalError("rows and columns left over do not pair up");
  }
  if (!last_rows.empty()) map_.assign(last_rows.front(), last_cols.front());
  if (!matrix_.is_permutation()) {
    throw InternalError("synthesis did not reach a permutation matrix");
  }
  const std::size_t n = matrix_.size();
  return {std::move(circuit_), std::move(map_), QubitMap::identity(n),
          std::move(steps_)};
}

SynthesisResult perm_row_col(const ParityMatrix& m, const Topology& g,
                             const PivotPolicy& policy) {
  SynthesisState state(m, g);
  while (!state.done()) {
    const auto rows = state.candidate_rows();
    const std::size_t row = choose_row(state.matrix(), rows, policy.row_rule);
    const std::size_t col =
        policy.mode == PivotMode::kFixedDiagonal
            ? row
            : choose_column(state.matrix(), row, state.unassigned_columns(),
                            policy.col_rule);
    state.eliminate(row, col);
  }
  return std::move(state).finish();
}

SynthesisResult synthesize_with_placement(const CnotCircuit& circuit,
                                          const Topology& g,
                                          const QubitMap& placement,
                                          const PivotPolicy& policy) {
  const std::size_t n = circuit.n_qubits();
  if (!placement.is_complete() || placement.size() != n) {
    throw UsageError("placement must be a complete map on the circuit's qubits");
  }
  // register_of as a lookup table.
  const std::vector<std::size_t> home = placement.inverse().assignment();
  const ParityMatrix logical = circuit_to_parity_matrix(circuit);
  ParityMatrix physical(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (logical.get(i, j)) physical.set(home[i], home[j], true);
    }
  }

  SynthesisResult result = perm_row_col(physical, g, policy);
  std::vector<std::size_t> composed(n);
  for (std::size_t reg = 0; reg < n; ++reg) {
    composed[reg] = placement.logical_at(result.map.logical_at(reg));
  }
  result.map = QubitMap::from_assignment(std::move(composed));
  result.placement = placement;
  return result;
}

bool respects_topology(const CnotCircuit& circuit, const Topology& g) {
  return std::all_of(circuit.gates().begin(), circuit.gates().end(),
                     [&](const Cnot& gate) {
                       return g.has_edge(gate.control, gate.target);
                     });
}

}  // namespace prc
