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

#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prc/parity.hpp"
#include "prc/search.hpp"
#include "prc/synthesis.hpp"
#include "prc/topology.hpp"

namespace prc {

enum class Algorithm { kRowCol, kPermRowCol, kPermRowColRt, kPermRowColAStar };

std::string_view to_string(Algorithm algo);
/// Accepts rowcol, permrowcol, permrowcol-rt and permrowcol-astar.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();

struct AlgorithmConfig {
  RtConfig rt;
  AStarConfig astar;
};

/// Synthesizes `circuit` over `g`. Only permrowcol-rt may return a
/// non-identity placement.
SynthesisResult run_algorithm(Algorithm algo, const CnotCircuit& circuit,
                              const Topology& g,
                              const AlgorithmConfig& config = {});

/// Uniform in [0, bound) by rejection; same stream on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// d independent CNOTs, each a uniform ordered pair of distinct qubits.
CnotCircuit random_cnot_circuit(std::size_t q, std::size_t d,
                                std::mt19937_64& rng);

/// Seed of circuit `index` in the (q, d) batch. Depends only on these, so
/// every algorithm and every topology of the same size sees the same circuits.
std::uint64_t circuit_seed(std::uint64_t seed, std::size_t q, std::size_t d,
                           std::size_t index);

struct BenchSpec {
  std::vector<std::string> topologies;
  std::vector<std::size_t> gate_counts;
  std::size_t circuits = 100;
  std::vector<Algorithm> algorithms = all_algorithms();
  std::uint64_t seed = 0;
  AlgorithmConfig config;
};

struct BenchRecord {
  std::string topology;
  std::size_t qubits = 0;
  std::size_t input_cnots = 0;
  Algorithm algorithm = Algorithm::kPermRowCol;
  double mean_output_cnots = 0;
  /// 100 * (out - in) / in averaged over circuits; 0 for empty inputs.
  double mean_overhead_pct = 0;
};

/// Raised when a synthesized circuit fails its check; the message names the
/// instance and its seed.
class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records in (topology, gate count, algorithm) order.
std::vector<BenchRecord> run_bench(const BenchSpec& spec);

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace prc
