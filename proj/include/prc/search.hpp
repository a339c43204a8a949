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
#include <utility>
#include <vector>

#include "prc/parity.hpp"
#include "prc/synthesis.hpp"
#include "prc/topology.hpp"

namespace prc {

struct RtConfig {
  /// Total synthesis passes, counting the first forward one.
  std::size_t iterations = 10;
};

struct AStarConfig {
  static constexpr std::size_t kUnbounded =
      std::numeric_limits<std::size_t>::max();

  /// Pivot pairs expanded per state, best first.
  std::size_t choice_width = 4;
  /// Open states kept after each expansion; the costliest are dropped.
  std::size_t max_queue = 10;
};

/// Alternately re-synthesizes the circuit and its reverse, starting each pass
/// from where the previous one left the qubits. Returns the cheapest forward
/// result; its placement is needed to check it.
SynthesisResult reverse_traversal(const CnotCircuit& circuit, const Topology& g,
                                  const RtConfig& config = {},
                                  const PivotPolicy& policy = {});

/// Every (row, column) pivot open in `state`, best first: lighter row, lower
/// row index, lighter column, lower column index.
std::vector<std::pair<std::size_t, std::size_t>> ranked_pivots(
    const SynthesisState& state);

/// Best-first search over pivot sequences, ordered by gates emitted so far.
/// choice_width == 1 gives plain perm_row_col.
SynthesisResult astar_perm_row_col(const ParityMatrix& m, const Topology& g,
                                   const AStarConfig& config = {});

}  // namespace prc
