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

#include "prc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "prc/errors.hpp"

namespace prc {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

std::size_t to_index(const std::string& word, std::size_t line) {
  std::size_t value = 0;
  const char* end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + word + "'");
  }
  return value;
}

// Collects "<register> <logical>" pairs and checks they form a bijection.
class MapBuilder {
 public:
  void add(std::size_t reg, std::size_t logical, std::size_t line) {
    pairs_.push_back({reg, logical, line});
  }
  bool empty() const { return pairs_.empty(); }

  QubitMap build(std::size_t n, const char* what) const {
    QubitMap map(n);
    for (const auto& p : pairs_) {
      try {
        map.assign(p.reg, p.logical);
      } catch (const UsageError& e) {
        throw ParseError(p.line, std::string(what) + ": " + e.what());
      }
    }
    if (!map.is_complete()) {
      throw ParseError(pairs_.empty() ? 0 : pairs_.back().line,
                       std::string(what) + " does not cover every register");
    }
    return map;
  }

 private:
  struct Entry {
    std::size_t reg, logical, line;
  };
  std::vector<Entry> pairs_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// Shared reader for `qubits <n>` + one keyword with two indices per line.
template <typename OnPair, typename OnComment>
std::size_t read_pairs(std::istream& in, std::string_view keyword,
                       OnPair on_pair, OnComment on_comment) {
  std::optional<std::size_t> n;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      on_comment(split(line.substr(hash + 1)), lineno);
      line.erase(hash);
    }
    const auto words = split(line);
    if (words.empty()) continue;
    if (words[0] == "qubits") {
      if (n) throw ParseError(lineno, "duplicate qubits header");
      if (words.size() != 2) throw ParseError(lineno, "usage: qubits <n>");
      n = to_index(words[1], lineno);
    } else if (words[0] == keyword) {
      if (!n) throw ParseError(lineno, "qubits header must come first");
      if (words.size() != 3) {
        throw ParseError(lineno, "usage: " + std::string(keyword) + " <a> <b>");
      }
      const std::size_t a = to_index(words[1], lineno);
      const std::size_t b = to_index(words[2], lineno);
      try {
        on_pair(*n, a, b);
      } catch (const UsageError& e) {
        throw ParseError(lineno, e.what());
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + words[0] + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing qubits header");
  return *n;
}

}  // namespace

CircuitFile parse_circuit(std::istream& in) {
  std::vector<Cnot> gates;
  MapBuilder map, placement;
  const std::size_t n = read_pairs(
      in, "cnot",
      [&](std::size_t n, std::size_t c, std::size_t t) {
        if (c >= n || t >= n || c == t) {
          throw UsageError("bad gate cnot " + std::to_string(c) + " " +
                           std::to_string(t) + " on " + std::to_string(n) +
                           " qubits");
        }
        gates.push_back({c, t});
      },
      [&](const std::vector<std::string>& words, std::size_t lineno) {
        if (words.empty() || (words[0] != "map" && words[0] != "placement")) {
          return;
        }
        if (words.size() != 3) {
          throw ParseError(lineno, "usage: # " + words[0] + " <register> <logical>");
        }
        auto& target = words[0] == "map" ? map : placement;
        target.add(to_index(words[1], lineno), to_index(words[2], lineno), lineno);
      });

  CircuitFile file;
  file.circuit = CnotCircuit(n, gates);
  if (!map.empty()) file.map = map.build(n, "map");
  if (!placement.empty()) file.placement = placement.build(n, "placement");
  return file;
}

CircuitFile read_circuit_file(const std::string& path) {
  auto in = open_input(path);
  return parse_circuit(in);
}

void write_circuit(std::ostream& out, const CnotCircuit& circuit,
                   const QubitMap* map, const QubitMap* placement) {
  out << "qubits " << circuit.n_qubits() << '\n';
  for (const Cnot& g : circuit.gates()) {
    out << "cnot " << g.control << ' ' << g.target << '\n';
  }
  if (placement) {
    for (std::size_t r = 0; r < placement->size(); ++r) {
      out << "# placement " << r << ' ' << placement->logical_at(r) << '\n';
    }
  }
  if (map) {
    for (std::size_t r = 0; r < map->size(); ++r) {
      out << "# map " << r << ' ' << map->logical_at(r) << '\n';
    }
  }
}

QubitMap read_map_file(const std::string& path, std::size_t n) {
  auto in = open_input(path);
  MapBuilder map;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto words = split(line);
    if (!words.empty() && words[0] == "#") words.erase(words.begin());
    if (words.empty() || words[0] != "map") continue;
    if (words.size() != 3) throw ParseError(lineno, "usage: map <register> <logical>");
    map.add(to_index(words[1], lineno), to_index(words[2], lineno), lineno);
  }
  if (map.empty()) throw ParseError(lineno, "no map lines in '" + path + "'");
  return map.build(n, "map");
}

Topology parse_topology(std::istream& in) {
  std::optional<Topology> g;
  const std::size_t n = read_pairs(
      in, "edge",
      [&](std::size_t n, std::size_t u, std::size_t v) {
        if (!g) g.emplace(n);
        g->add_edge(u, v);
      },
      [](const std::vector<std::string>&, std::size_t) {});
  return g ? std::move(*g) : Topology(n);
}

Topology load_topology(std::string_view name_or_path) {
  for (const auto& name : builtin_topology_names()) {
    if (name == name_or_path) return builtin_topology(name);
  }
  std::ifstream in{std::string(name_or_path)};
  if (!in) {
    std::string names;
    for (const auto& name : builtin_topology_names()) names += " " + name;
    throw UsageError("'" + std::string(name_or_path) +
                     "' is neither a file nor a builtin topology (builtins:" +
                     names + ")");
  }
  return parse_topology(in);
}

}  // namespace prc
