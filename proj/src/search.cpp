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

#include "prc/search.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <tuple>

#include "prc/errors.hpp"

namespace prc {

SynthesisResult reverse_traversal(const CnotCircuit& circuit, const Topology& g,
                                  const RtConfig& config,
                                  const PivotPolicy& policy) {
  if (config.iterations == 0) throw UsageError("RT needs at least one iteration");
  const CnotCircuit backwards = circuit.reversed();

  SynthesisResult best = synthesize_with_placement(
      circuit, g, QubitMap::identity(circuit.n_qubits()), policy);
  SynthesisResult prev = best;
  for (std::size_t it = 1; it < config.iterations; ++it) {
    const bool forward = it % 2 == 0;
    SynthesisResult cur = synthesize_with_placement(
        forward ? circuit : backwards, g, prev.map, policy);
    if (forward && cur.gate_count() < best.gate_count()) best = cur;
    prev = std::move(cur);
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> ranked_pivots(
    const SynthesisState& state) {
  const ParityMatrix& m = state.matrix();
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> keyed;
  for (std::size_t row : state.candidate_rows()) {
    const std::size_t rw = m.row_weight(row);
    for (std::size_t col : state.eligible_columns(row)) {
      keyed.emplace_back(rw, row, m.column_weight(col), col);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(keyed.size());
  for (const auto& [rw, row, cw, col] : keyed) out.emplace_back(row, col);
  return out;
}

SynthesisResult astar_perm_row_col(const ParityMatrix& m, const Topology& g,
                                   const AStarConfig& config) {
  if (config.choice_width == 0 || config.max_queue == 0) {
    throw UsageError("choice width and queue size must be at least 1");
  }
  // Keyed by (gates so far, insertion order): equal costs pop first-in first.
  std::map<std::pair<std::size_t, std::size_t>, SynthesisState> open;
  std::size_t seq = 0;
  open.emplace(std::pair{std::size_t{0}, seq++}, SynthesisState(m, g));

  while (!open.empty()) {
    auto node = open.extract(open.begin());
    SynthesisState& state = node.mapped();
    if (state.done()) return std::move(state).finish();

    const auto pivots = ranked_pivots(state);
    if (pivots.empty()) throw InternalError("search state has no open pivot");
    const std::size_t width = std::min(config.choice_width, pivots.size());
    for (std::size_t i = 0; i < width; ++i) {
      SynthesisState child = state;
      child.eliminate(pivots[i].first, pivots[i].second);
      const std::size_t cost = child.gate_count();
      open.emplace(std::pair{cost, seq++}, std::move(child));
    }
    while (open.size() > config.max_queue) open.erase(std::prev(open.end()));
  }
  throw InternalError("search queue ran dry");
}

}  // namespace prc
