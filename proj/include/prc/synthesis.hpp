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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "prc/parity.hpp"
#include "prc/topology.hpp"

namespace prc {

enum class RowRule {
  kMinWeight,    ///< fewest ones in the row
  kLowestIndex,  ///< first candidate
};

enum class ColumnRule {
  kMinWeight,    ///< fewest ones in the column
  kLowestIndex,  ///< first eligible column
};

enum class PivotMode {
  kPermuted,       ///< any unassigned column with a 1 in the pivot row
  kFixedDiagonal,  ///< column == row, i.e. RowCol
};

struct PivotPolicy {
  RowRule row_rule = RowRule::kMinWeight;
  ColumnRule col_rule = ColumnRule::kMinWeight;
  PivotMode mode = PivotMode::kPermuted;

  static PivotPolicy perm_row_col() { return {}; }
  static PivotPolicy row_col() {
    return {RowRule::kMinWeight, ColumnRule::kMinWeight,
            PivotMode::kFixedDiagonal};
  }
};

/// One round of elimination: pivot row, pivot column, and the gates it cost.
struct EliminationStep {
  std::size_t row = 0;
  std::size_t column = 0;
  std::vector<Cnot> column_gates;
  std::vector<Cnot> row_gates;

  std::size_t gate_count() const {
    return column_gates.size() + row_gates.size();
  }
};

struct SynthesisResult {
  CnotCircuit circuit;
  /// Where each output wire ends: assignment[register] = logical, i.e. the
  /// pivot row holds the pivot column.
  QubitMap map;
  /// Where each logical input starts; identity unless synthesized with a
  /// placement.
  QubitMap placement;
  std::vector<EliminationStep> steps;

  std::size_t gate_count() const { return circuit.size(); }
};

/// Candidate with the fewest ones in its row; ties to the lowest index.
std::size_t choose_row(const ParityMatrix& m,
                       std::span<const std::size_t> candidates,
                       RowRule rule = RowRule::kMinWeight);

/// Among `candidates` with a 1 in `pivot_row`, the column with the fewest
/// ones; ties to the lowest index. Throws InternalError if none qualifies.
std::size_t choose_column(const ParityMatrix& m, std::size_t pivot_row,
                          std::span<const std::size_t> candidates,
                          ColumnRule rule = ColumnRule::kMinWeight);

/// Reduces `pivot_col` to the basis vector at tree.root() with CNOTs along the
/// tree. The tree's non-root terminals must be exactly the rows holding a 1 in
/// the pivot column. Returns the gates in emission order; `m` is updated only
/// if the whole elimination succeeds.
std::vector<Cnot> eliminate_column(ParityMatrix& m, const Topology& g,
                                   const SteinerTree& tree,
                                   std::size_t pivot_col);

/// Adds the tree's terminals into `pivot_row` (the root), leaving it a basis
/// vector. Steiner nodes are added twice and cancel. Throws UsageError if the
/// terminals do not reduce the row; `m` is then left untouched.
std::vector<Cnot> eliminate_row(ParityMatrix& m, const Topology& g,
                                const SteinerTree& tree, std::size_t pivot_row);

/// A PermRowCol run in progress: the working matrix, the remaining topology
/// and everything emitted so far. perm_row_col drives it with the heuristics;
/// the A* search forks it per pivot choice.
class SynthesisState {
 public:
  /// Throws UsageError unless m is invertible, g is connected with every
  /// vertex active, and the sizes agree.
  SynthesisState(const ParityMatrix& m, const Topology& g);

  bool done() const { return graph_.active_count() <= 1; }
  std::size_t gate_count() const { return circuit_.size(); }
  const ParityMatrix& matrix() const { return matrix_; }
  const Topology& topology() const { return graph_; }
  const QubitMap& map() const { return map_; }

  /// Non-cutting vertices of the remaining topology.
  std::vector<std::size_t> candidate_rows() const;
  std::vector<std::size_t> unassigned_columns() const;
  /// Unassigned columns with a 1 in `row`.
  std::vector<std::size_t> eligible_columns(std::size_t row) const;

  /// One round: eliminate column `col` and row `row`, map col -> row, drop
  /// vertex `row` from the topology.
  void eliminate(std::size_t row, std::size_t col);

  /// Assigns the last register and hands back the result. Requires done().
  SynthesisResult finish() &&;

 private:
  const ShortestPaths& paths();

  ParityMatrix matrix_;
  Topology graph_;
  QubitMap map_;
  CnotCircuit circuit_;
  std::vector<EliminationStep> steps_;
  std::optional<ShortestPaths> paths_;
};

/// Steiner-tree synthesis of `m` over `g` that eliminates one row and one
/// column per round, returning the circuit and the output qubit map such that
/// verify_equivalence(m, circuit, map) holds.
SynthesisResult perm_row_col(const ParityMatrix& m, const Topology& g,
                             const PivotPolicy& policy = {});

/// Synthesizes `circuit` with logical qubit i starting on register
/// placement.register_of(i). The returned map already folds the placement
/// in, so verify_equivalence(original, circuit, map, placement) holds.
SynthesisResult synthesize_with_placement(const CnotCircuit& circuit,
                                          const Topology& g,
                                          const QubitMap& placement,
                                          const PivotPolicy& policy = {});

/// Every gate acts on an edge of g.
bool respects_topology(const CnotCircuit& circuit, const Topology& g);

}  // namespace prc
