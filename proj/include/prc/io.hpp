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

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "prc/parity.hpp"
#include "prc/topology.hpp"

namespace prc {

/// A circuit file plus the qubit maps a routed file may carry as
/// `# map <register> <logical>` / `# placement <register> <logical>` comments.
struct CircuitFile {
  CnotCircuit circuit;
  std::optional<QubitMap> map;
  std::optional<QubitMap> placement;
};

/// Reads `qubits <n>` then `cnot <control> <target>` lines. Throws ParseError
/// with the offending line number.
CircuitFile parse_circuit(std::istream& in);
CircuitFile read_circuit_file(const std::string& path);

void write_circuit(std::ostream& out, const CnotCircuit& circuit,
                   const QubitMap* map = nullptr,
                   const QubitMap* placement = nullptr);

/// Map-only file: `map <register> <logical>` lines, with or without a leading
/// '#'. `n` is the expected qubit count.
QubitMap read_map_file(const std::string& path, std::size_t n);

/// Reads `qubits <n>` then `edge <u> <v>` lines.
Topology parse_topology(std::istream& in);

/// Catalog name, or else a path to a topology file.
Topology load_topology(std::string_view name_or_path);

}  // namespace prc
