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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "worked_example.hpp"
#include "oracles.hpp"
#include "prc/errors.hpp"
#include "prc/synthesis.hpp"

namespace prc {
namespace {

TEST(WorkedExample, InjectedTreesReproduceEveryStep) {
  Topology g = builtin_topology("grid2x3");
  ParityMatrix m = worked_example::from(worked_example::kInitial);
  for (const auto& step : worked_example::steps()) {
    SCOPED_TRACE("pivot row " + std::to_string(step.row));
    if (!step.col_terminals.empty()) {
      const auto tree = SteinerTree::from_edges(6, step.row, step.col_terminals,
                                                step.col_tree);
      EXPECT_EQ(eliminate_column(m, g, tree, step.col), step.col_gates);
    }
    EXPECT_EQ(m, worked_example::from(step.after_col));
    if (!step.row_terminals.empty()) {
      const auto tree = SteinerTree::from_edges(6, step.row, step.row_terminals,
                                                step.row_tree);
      EXPECT_EQ(eliminate_row(m, g, tree, step.row), step.row_gates);
    }
    EXPECT_EQ(m, worked_example::from(step.after_row));
    g.remove_vertex(step.row);
  }
  EXPECT_TRUE(m.is_permutation());
}

TEST(WorkedExample, PivotTrace) {
  SynthesisState state(worked_example::from(worked_example::kInitial),
                       builtin_topology("grid2x3"));
  std::vector<std::size_t> rows, cols;
  while (!state.done()) {
    const auto candidates = state.candidate_rows();
    const std::size_t r = choose_row(state.matrix(), candidates);
    const std::size_t c = choose_column(state.matrix(), r, state.unassigned_columns());
    rows.push_back(r);
    cols.push_back(c);
    state.eliminate(r, c);
  }
  EXPECT_EQ(rows, (std::vector<std::size_t>{0, 1, 3, 4, 2}));
  EXPECT_EQ(cols, (std::vector<std::size_t>{3, 2, 1, 4, 5}));
}

TEST(WorkedExample, EndToEnd) {
  const auto a = worked_example::from(worked_example::kInitial);
  const Topology g = builtin_topology("grid2x3");
  const SynthesisResult r = perm_row_col(a, g);
  EXPECT_EQ(r.circuit, worked_example::routed_circuit());
  EXPECT_EQ(r.map.assignment(), worked_example::kFinalMap);
  EXPECT_TRUE(r.placement.is_identity());
  EXPECT_TRUE(verify_equivalence(a, r.circuit, r.map));
  ASSERT_EQ(r.steps.size(), 5u);
  const auto steps = worked_example::steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    EXPECT_EQ(r.steps[i].row, steps[i].row);
    EXPECT_EQ(r.steps[i].column, steps[i].col);
    EXPECT_EQ(r.steps[i].column_gates, steps[i].col_gates);
    EXPECT_EQ(r.steps[i].row_gates, steps[i].row_gates);
  }
}

TEST(ChooseRow, Rules) {
  const auto m = ParityMatrix::from_rows({"111", "011", "001"});
  const std::vector<std::size_t> rows{0, 1, 2};
  EXPECT_EQ(choose_row(m, rows), 2u);
  EXPECT_EQ(choose_row(m, rows, RowRule::kLowestIndex), 0u);
  const std::vector<std::size_t> two{0, 1};
  EXPECT_EQ(choose_row(m, two), 1u);
  EXPECT_THROW(choose_row(m, std::vector<std::size_t>{}), UsageError);
}

TEST(ChooseColumn, Rules) {
  const auto m = ParityMatrix::from_rows({"111", "011", "001"});
  const std::vector<std::size_t> cols{0, 1, 2};
  EXPECT_EQ(choose_column(m, 0, cols), 0u);
  EXPECT_EQ(choose_column(m, 1, cols), 1u);
  EXPECT_EQ(choose_column(m, 1, cols, ColumnRule::kLowestIndex), 1u);
  const std::vector<std::size_t> only_first{0};
  EXPECT_THROW(choose_column(m, 2, only_first), InternalError);
}

TEST(EliminateColumn, RejectsWrongTerminalsAndLeavesMatrixAlone) {
  const Topology g = builtin_topology("grid2x3");
  ParityMatrix m = worked_example::from(worked_example::kInitial);
  const ParityMatrix before = m;
  const std::vector<Edge> edges{{0, 3}};
  const std::vector<std::size_t> terminals{3};
  const auto tree = SteinerTree::from_edges(6, 0, terminals, edges);
  EXPECT_THROW(eliminate_column(m, g, tree, 3), UsageError);
  EXPECT_EQ(m, before);
}

TEST(EliminateColumn, RejectsNonEdges) {
  const Topology g = Topology::line(3);
  ParityMatrix m = ParityMatrix::from_rows({"100", "000", "100"});
  m.set(1, 1, true);
  m.set(2, 2, true);
  const std::vector<Edge> edges{{0, 2}};
  const std::vector<std::size_t> terminals{2};
  const auto tree = SteinerTree::from_edges(3, 0, terminals, edges);
  EXPECT_THROW(eliminate_column(m, g, tree, 0), UsageError);
}

TEST(EliminateColumn, ZeroRootIsFilledFirst) {
  // Fixed-diagonal pivot with a 0 on the diagonal.
  const Topology g = Topology::line(3);
  ParityMatrix m = ParityMatrix::from_rows({"010", "100", "001"});
  const std::vector<Edge> edges{{0, 1}};
  const std::vector<std::size_t> terminals{1};
  const auto tree = SteinerTree::from_edges(3, 0, terminals, edges);
  const auto gates = eliminate_column(m, g, tree, 0);
  EXPECT_EQ(gates, (std::vector<Cnot>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(m.is_basis_column(0));
  EXPECT_TRUE(m.get(0, 0));
}

TEST(EliminateRow, RejectsWrongRootAndWrongTerminals) {
  const Topology g = builtin_topology("grid2x3");
  ParityMatrix m = worked_example::from(worked_example::steps()[0].after_col);
  const ParityMatrix before = m;
  const std::vector<Edge> edges{{0, 1}, {0, 3}};
  const std::vector<std::size_t> right{0, 1, 3};
  EXPECT_THROW(eliminate_row(m, g, SteinerTree::from_edges(6, 1, right,
                                                           std::vector<Edge>{{1, 0}, {0, 3}}),
                             0),
               UsageError);
  const std::vector<std::size_t> wrong{0, 1};
  EXPECT_THROW(eliminate_row(m, g, SteinerTree::from_edges(6, 0, wrong,
                                                           std::vector<Edge>{{0, 1}}),
                             0),
               UsageError);
  EXPECT_EQ(m, before);
  EXPECT_NO_THROW(eliminate_row(m, g, SteinerTree::from_edges(6, 0, right, edges), 0));
}

TEST(RowCol, ThreeQubitLineLongRangeCnot) {
  CnotCircuit c(3);
  c.add_cnot(0, 2);
  const Topology g = Topology::line(3);
  const ParityMatrix m = circuit_to_parity_matrix(c);
  // The lighter end row goes first and costs a gate more than the optimum.
  const SynthesisResult light = perm_row_col(m, g, PivotPolicy::row_col());
  EXPECT_EQ(light.gate_count(), 5u);
  EXPECT_TRUE(light.map.is_identity());
  EXPECT_TRUE(verify_equivalence(m, light.circuit, light.map));

  PivotPolicy first = PivotPolicy::row_col();
  first.row_rule = RowRule::kLowestIndex;
  const SynthesisResult lowest = perm_row_col(m, g, first);
  EXPECT_EQ(lowest.gate_count(), 4u);
  EXPECT_EQ(oracle::optimal_cnot_count(m, g), 4u);
  EXPECT_TRUE(verify_equivalence(m, lowest.circuit, lowest.map));
}

TEST(RowCol, NeverBeatsBreadthFirstOptimum) {
  std::mt19937_64 rng(2);
  const Topology g = Topology::line(3);
  for (int trial = 0; trial < 30; ++trial) {
    const ParityMatrix m = circuit_to_parity_matrix(oracle::random_circuit(3, 4, rng));
    const auto r = perm_row_col(m, g, PivotPolicy::row_col());
    EXPECT_GE(r.gate_count(), oracle::optimal_cnot_count(m, g));
  }
}

struct Instance {
  std::string topology;
  CnotCircuit circuit;
};

std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed) {
  const auto names = builtin_topology_names();
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& name = names[rng() % names.size()];
    const Topology g = builtin_topology(name);
    const std::size_t d = 1 + rng() % (2 * g.edge_count());
    out.push_back({name, oracle::random_circuit(g.size(), d, rng)});
  }
  return out;
}

TEST(PermRowCol, EquivalentAndLegalOnRandomInstances) {
  for (const auto& inst : random_instances(150, 99)) {
    const Topology g = builtin_topology(inst.topology);
    const ParityMatrix m = circuit_to_parity_matrix(inst.circuit);
    for (const auto& policy : {PivotPolicy::perm_row_col(), PivotPolicy::row_col()}) {
      const SynthesisResult r = perm_row_col(m, g, policy);
      EXPECT_TRUE(respects_topology(r.circuit, g)) << inst.topology;
      EXPECT_TRUE(oracle::equivalent(inst.circuit, r.circuit, r.map.assignment(),
                                     r.placement.assignment()))
          << inst.topology;
      EXPECT_TRUE(verify_equivalence(m, r.circuit, r.map));
      if (policy.mode == PivotMode::kFixedDiagonal) {
        EXPECT_TRUE(r.map.is_identity());
      }
      std::size_t logged = 0;
      for (const auto& s : r.steps) logged += s.gate_count();
      EXPECT_EQ(logged, r.gate_count());
      EXPECT_EQ(r.steps.size() + 1, g.size());
    }
  }
}

TEST(PermRowCol, UnconstrainedOnCompleteGraph) {
  std::mt19937_64 rng(6);
  const Topology g = Topology::complete(7);
  for (int trial = 0; trial < 30; ++trial) {
    const CnotCircuit c = oracle::random_circuit(7, 40, rng);
    const auto r = perm_row_col(circuit_to_parity_matrix(c), g);
    EXPECT_TRUE(oracle::equivalent(c, r.circuit, r.map.assignment(),
                                   r.placement.assignment()));
  }
}

TEST(PermRowCol, TrivialSizes) {
  const auto one = perm_row_col(ParityMatrix::identity(1), Topology(1));
  EXPECT_TRUE(one.circuit.empty());
  EXPECT_TRUE(one.map.is_identity());
  const auto id = perm_row_col(ParityMatrix::identity(5), Topology::line(5));
  EXPECT_TRUE(id.circuit.empty());
  EXPECT_TRUE(id.map.is_identity());
}

TEST(PermRowCol, RejectsBadInput) {
  EXPECT_THROW(perm_row_col(ParityMatrix::from_rows({"11", "11"}), Topology::line(2)),
               UsageError);
  EXPECT_THROW(perm_row_col(ParityMatrix::identity(3), Topology::line(2)), UsageError);
  EXPECT_THROW(perm_row_col(ParityMatrix::identity(3), Topology(3)), UsageError);
  Topology shrunk = Topology::line(3);
  shrunk.remove_vertex(0);
  EXPECT_THROW(perm_row_col(ParityMatrix::identity(3), shrunk), UsageError);
}

TEST(SynthesisState, CutVertexPivotLeavesStateUntouched) {
  SynthesisState state(worked_example::from(worked_example::kInitial), Topology::line(6));
  EXPECT_THROW(state.eliminate(2, 0), UsageError);
  EXPECT_EQ(state.gate_count(), 0u);
  EXPECT_EQ(state.matrix(), worked_example::from(worked_example::kInitial));
  EXPECT_EQ(state.topology().active_count(), 6u);
  EXPECT_THROW(SynthesisState(state).finish(), UsageError);
}

TEST(SynthesizeWithPlacement, ComposesPlacementIntoMap) {
  std::mt19937_64 rng(13);
  const Topology g = builtin_topology("square9");
  for (int trial = 0; trial < 50; ++trial) {
    const CnotCircuit c = oracle::random_circuit(9, 20, rng);
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const QubitMap placement = QubitMap::from_assignment(perm);
    const auto r = synthesize_with_placement(c, g, placement);
    EXPECT_EQ(r.placement, placement);
    EXPECT_TRUE(respects_topology(r.circuit, g));
    EXPECT_TRUE(oracle::equivalent(c, r.circuit, r.map.assignment(), perm));
    EXPECT_TRUE(verify_equivalence(circuit_to_parity_matrix(c), r.circuit, r.map,
                                   placement));
  }
  EXPECT_THROW(synthesize_with_placement(CnotCircuit(9), g, QubitMap(9)), UsageError);
}

}  // namespace
}  // namespace prc
