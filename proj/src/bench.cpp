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

#include "prc/bench.hpp"

#include <fmt/format.h>

#include <array>
#include <limits>

#include "prc/errors.hpp"
#include "prc/io.hpp"
#include "prc/topology.hpp"

namespace prc {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 4> kNames{{
    {Algorithm::kRowCol, "rowcol"},
    {Algorithm::kPermRowCol, "permrowcol"},
    {Algorithm::kPermRowColRt, "permrowcol-rt"},
    {Algorithm::kPermRowColAStar, "permrowcol-astar"},
}};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(Algorithm algo) {
  for (const auto& [a, name] : kNames) {
    if (a == algo) return name;
  }
  throw InternalError("unknown algorithm enumerator");
}

Algorithm parse_algorithm(std::string_view name) {
  for (const auto& [a, known] : kNames) {
    if (known == name) return a;
  }
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected rowcol, permrowcol, permrowcol-rt or "
                   "permrowcol-astar)");
}

std::vector<Algorithm> all_algorithms() {
  std::vector<Algorithm> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

SynthesisResult run_algorithm(Algorithm algo, const CnotCircuit& circuit,
                              const Topology& g, const AlgorithmConfig& config) {
  if (circuit.n_qubits() != g.size()) {
    throw UsageError("circuit has " + std::to_string(circuit.n_qubits()) +
                     " qubits but the topology has " + std::to_string(g.size()));
  }
  switch (algo) {
    case Algorithm::kRowCol:
      return perm_row_col(circuit_to_parity_matrix(circuit), g,
                          PivotPolicy::row_col());
    case Algorithm::kPermRowCol:
      return perm_row_col(circuit_to_parity_matrix(circuit), g);
    case Algorithm::kPermRowColRt:
      return reverse_traversal(circuit, g, config.rt);
    case Algorithm::kPermRowColAStar:
      return astar_perm_row_col(circuit_to_parity_matrix(circuit), g,
                                config.astar);
  }
  throw InternalError("unknown algorithm enumerator");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw UsageError("uniform_below needs a positive bound");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of bound, minus one; draws above it would bias low values.
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

CnotCircuit random_cnot_circuit(std::size_t q, std::size_t d,
                                std::mt19937_64& rng) {
  if (q < 2 && d > 0) {
    throw UsageError("a CNOT needs at least 2 qubits, got " + std::to_string(q));
  }
  CnotCircuit c(q);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t control = uniform_below(rng, q);
    std::size_t target = uniform_below(rng, q - 1);
    if (target >= control) ++target;
    c.add_cnot(control, target);
  }
  return c;
}

std::uint64_t circuit_seed(std::uint64_t seed, std::size_t q, std::size_t d,
                           std::size_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ q);
  h = splitmix64(h ^ d);
  return splitmix64(h ^ index);
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  if (spec.circuits == 0) throw UsageError("bench needs at least one circuit");
  std::vector<BenchRecord> records;
  for (const auto& name : spec.topologies) {
    const Topology g = load_topology(name);
    const std::size_t q = g.size();
    for (std::size_t d : spec.gate_counts) {
      for (Algorithm algo : spec.algorithms) {
        double total_out = 0;
        double total_overhead = 0;
        for (std::size_t i = 0; i < spec.circuits; ++i) {
          const std::uint64_t seed = circuit_seed(spec.seed, q, d, i);
          std::mt19937_64 rng(seed);
          const CnotCircuit circuit = random_cnot_circuit(q, d, rng);
          const SynthesisResult r = run_algorithm(algo, circuit, g, spec.config);
          if (!respects_topology(r.circuit, g) ||
              !verify_equivalence(circuit_to_parity_matrix(circuit), r.circuit,
                                  r.map, r.placement)) {
            throw BenchError(fmt::format(
                "{} on {} failed verification: d={}, instance {}, seed {} "
                "(bench seed {})",
                to_string(algo), name, d, i, seed, spec.seed));
          }
          const double out = static_cast<double>(r.gate_count());
          total_out += out;
          if (d > 0) total_overhead += 100.0 * (out - d) / d;
        }
        const double count = static_cast<double>(spec.circuits);
        records.push_back({name, q, d, algo, total_out / count,
                           total_overhead / count});
      }
    }
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "topology,qubits,input_cnots,algorithm,mean_output_cnots,"
         "mean_overhead_pct\n";
  for (const auto& r : records) {
    out << fmt::format("{},{},{},{},{:.3f},{:.3f}\n", r.topology, r.qubits,
                       r.input_cnots, to_string(r.algorithm),
                       r.mean_output_cnots, r.mean_overhead_pct);
  }
}

}  // namespace prc
