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

#include "prc/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "prc/bench.hpp"
#include "prc/errors.hpp"
#include "prc/io.hpp"
#include "prc/search.hpp"
#include "prc/synthesis.hpp"
#include "prc/topology.hpp"

namespace prc::cli {

namespace {

struct SearchFlags {
  std::size_t rt_iters = RtConfig{}.iterations;
  std::size_t choice_width = AStarConfig{}.choice_width;
  std::size_t max_queue = AStarConfig{}.max_queue;

  AlgorithmConfig config() const {
    AlgorithmConfig c;
    c.rt.iterations = rt_iters;
    c.astar.choice_width = choice_width;
    c.astar.max_queue = max_queue;
    return c;
  }
};

void add_search_flags(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--rt-iters", flags.rt_iters, "Reverse-traversal passes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--choice-width", flags.choice_width,
                  "A* pivots expanded per state")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-queue", flags.max_queue, "A* open-list bound")
      ->check(CLI::PositiveNumber);
}

std::string gate_list(const std::vector<Cnot>& gates) {
  std::string s;
  for (const Cnot& g : gates) {
    s += fmt::format("{}CNOT({},{})", s.empty() ? "" : " ", g.control, g.target);
  }
  return s.empty() ? "-" : s;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

struct RouteArgs {
  std::string input;
  std::string topology;
  std::string algo = "permrowcol";
  std::string output;
  bool explain = false;
  SearchFlags search;
};

int route(const RouteArgs& a, std::ostream& out, std::ostream& err) {
  const CircuitFile file = read_circuit_file(a.input);
  const Topology g = load_topology(a.topology);
  if (file.circuit.n_qubits() != g.size()) {
    throw UsageError(fmt::format("circuit has {} qubits, topology has {}",
                                 file.circuit.n_qubits(), g.size()));
  }
  const Algorithm algo = parse_algorithm(a.algo);
  const SynthesisResult r =
      run_algorithm(algo, file.circuit, g, a.search.config());
  if (!respects_topology(r.circuit, g) ||
      !verify_equivalence(circuit_to_parity_matrix(file.circuit), r.circuit,
                          r.map, r.placement)) {
    throw InternalError("routed circuit failed its own verification");
  }

  const QubitMap* placement = r.placement.is_identity() ? nullptr : &r.placement;
  std::ostream* stats = &out;
  std::ofstream file_out;
  if (a.output.empty() || a.output == "-") {
    write_circuit(out, r.circuit, &r.map, placement);
    stats = &err;
  } else {
    file_out = open_output(a.output);
    write_circuit(file_out, r.circuit, &r.map, placement);
  }
  *stats << fmt::format("input cnots: {}\noutput cnots: {}\n",
                        file.circuit.size(), r.gate_count());
  if (a.explain) {
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& s = r.steps[i];
      *stats << fmt::format("step {}: row {} column {} | column: {} | row: {}\n",
                            i + 1, s.row, s.column, gate_list(s.column_gates),
                            gate_list(s.row_gates));
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string original;
  std::string routed;
  std::string map_file;
  std::string topology;
  bool identity_map = false;
};

int verify(const VerifyArgs& a, std::ostream& out) {
  const CircuitFile original = read_circuit_file(a.original);
  const CircuitFile routed = read_circuit_file(a.routed);
  const std::size_t n = original.circuit.n_qubits();
  if (routed.circuit.n_qubits() != n) {
    throw UsageError(fmt::format("qubit counts differ: {} vs {}", n,
                                 routed.circuit.n_qubits()));
  }
  QubitMap map = QubitMap::identity(n);
  if (!a.map_file.empty()) {
    map = read_map_file(a.map_file, n);
  } else if (!a.identity_map && routed.map) {
    map = *routed.map;
  }
  const QubitMap placement = routed.placement.value_or(QubitMap::identity(n));

  if (!verify_equivalence(circuit_to_parity_matrix(original.circuit),
                          routed.circuit, map, placement)) {
    out << "not equivalent\n";
    return kMismatch;
  }
  if (!a.topology.empty()) {
    const Topology g = load_topology(a.topology);
    if (g.size() != n) throw UsageError("topology size does not match circuit");
    for (const Cnot& gate : routed.circuit.gates()) {
      if (!g.has_edge(gate.control, gate.target)) {
        out << fmt::format("gate CNOT({},{}) is not a topology edge\n",
                           gate.control, gate.target);
        return kMismatch;
      }
    }
  }
  out << "equivalent\n";
  return kOk;
}

struct GenArgs {
  std::size_t qubits = 0;
  std::size_t gates = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string dir = ".";
};

int gen(const GenArgs& a, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(a.dir, ec);
  for (std::size_t i = 0; i < a.count; ++i) {
    std::mt19937_64 rng(circuit_seed(a.seed, a.qubits, a.gates, i));
    const CnotCircuit c = random_cnot_circuit(a.qubits, a.gates, rng);
    const fs::path path =
        fs::path(a.dir) / fmt::format("circuit_{}q_{}g_{}.cnot", a.qubits, a.gates, i);
    auto f = open_output(path.string());
    write_circuit(f, c);
  }
  out << fmt::format("wrote {} circuit(s) to {}\n", a.count, a.dir);
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> topologies;
  std::vector<std::size_t> gates;
  std::vector<std::string> algos;
  std::size_t circuits = 100;
  std::uint64_t seed = 0;
  std::string csv;
  SearchFlags search;
};

int bench(const BenchArgs& a, std::ostream& out) {
  BenchSpec spec;
  spec.topologies = a.topologies;
  spec.gate_counts = a.gates;
  spec.circuits = a.circuits;
  spec.seed = a.seed;
  spec.config = a.search.config();
  if (!a.algos.empty()) {
    spec.algorithms.clear();
    for (const auto& name : a.algos) spec.algorithms.push_back(parse_algorithm(name));
  }
  const auto records = run_bench(spec);
  if (a.csv.empty() || a.csv == "-") {
    write_csv(out, records);
  } else {
    auto f = open_output(a.csv);
    write_csv(f, records);
  }
  return kOk;
}

int topologies(std::ostream& out) {
  out << "name,qubits,edges,mean_distance,mean_degree\n";
  for (const auto& name : builtin_topology_names()) {
    const Topology g = builtin_topology(name);
    const TopologyStats s = topology_stats(g);
    out << fmt::format("{},{},{},{:.4f},{:.4f}\n", name, g.size(),
                       g.edge_count(), s.mean_distance, s.mean_degree);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Architecture-aware CNOT circuit synthesis", "prc"};
  app.require_subcommand(1);

  RouteArgs route_args;
  auto* route_cmd = app.add_subcommand("route", "Resynthesize a circuit for a topology");
  route_cmd->add_option("circuit", route_args.input, "Circuit file")->required();
  route_cmd->add_option("--topology", route_args.topology, "Builtin name or file")
      ->required();
  route_cmd->add_option("--algo", route_args.algo,
                        "rowcol|permrowcol|permrowcol-rt|permrowcol-astar");
  route_cmd->add_option("-o,--output", route_args.output, "Output file (default stdout)");
  route_cmd->add_flag("--explain", route_args.explain, "Print the pivot log");
  add_search_flags(route_cmd, route_args.search);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a routed circuit against the original");
  verify_cmd->add_option("original", verify_args.original, "Original circuit")->required();
  verify_cmd->add_option("routed", verify_args.routed, "Routed circuit")->required();
  auto* map_opt = verify_cmd->add_option("--map", verify_args.map_file,
                                         "Map file (default: the routed file's map)");
  verify_cmd->add_flag("--identity-map", verify_args.identity_map, "Ignore any map")
      ->excludes(map_opt);
  verify_cmd->add_option("--topology", verify_args.topology,
                         "Also require every gate to be an edge");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Write random CNOT circuits");
  gen_cmd->add_option("-q,--qubits", gen_args.qubits)->required();
  gen_cmd->add_option("-d,--gates", gen_args.gates)->required();
  gen_cmd->add_option("-n,--count", gen_args.count);
  gen_cmd->add_option("--seed", gen_args.seed);
  gen_cmd->add_option("-o,--dir", gen_args.dir, "Output directory");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Average gate counts over random circuits");
  bench_cmd->add_option("--topology", bench_args.topologies)->required();
  bench_cmd->add_option("-d,--gates", bench_args.gates)->required();
  bench_cmd->add_option("--algo", bench_args.algos, "Repeatable; default all");
  bench_cmd->add_option("-n,--circuits", bench_args.circuits)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--csv", bench_args.csv, "CSV path (default stdout)");
  add_search_flags(bench_cmd, bench_args.search);

  auto* topo_cmd = app.add_subcommand("topologies", "List the builtin topologies");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*route_cmd) return route(route_args, out, err);
    if (*verify_cmd) return verify(verify_args, out);
    if (*gen_cmd) return gen(gen_args, out);
    if (*bench_cmd) return bench(bench_args, out);
    if (*topo_cmd) return topologies(out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace prc::cli
