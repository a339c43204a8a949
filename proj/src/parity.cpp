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

#include "prc/parity.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "prc/errors.hpp"

namespace prc {

CnotCircuit::CnotCircuit(std::size_t n_qubits, std::span<const Cnot> gates)
    : n_qubits_(n_qubits) {
  append(gates);
}

void CnotCircuit::add_cnot(std::size_t control, std::size_t target) {
  if (control >= n_qubits_ || target >= n_qubits_) {
    throw UsageError("CNOT(" + std::to_string(control) + "," +
                     std::to_string(target) + ") outside a " +
                     std::to_string(n_qubits_) + "-qubit circuit");
  }
  if (control == target) {
    throw UsageError("CNOT control and target coincide on qubit " +
                     std::to_string(control));
  }
  gates_.push_back({control, target});
}

void CnotCircuit::append(std::span<const Cnot> gates) {
  gates_.reserve(gates_.size() + gates.size());
  for (const Cnot& g : gates) add_cnot(g.control, g.target);
}

CnotCircuit CnotCircuit::reversed() const {
  CnotCircuit out(n_qubits_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

// ---------------------------------------------------------------------------

ParityMatrix::ParityMatrix(std::size_t n)
    : n_(n),
      words_per_row_((n + kWordBits - 1) / kWordBits),
      words_(n * words_per_row_, 0) {}

ParityMatrix ParityMatrix::identity(std::size_t n) {
  ParityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

ParityMatrix ParityMatrix::from_rows(std::span<const std::string_view> rows) {
  ParityMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw UsageError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') {
        throw UsageError(std::string("matrix entry must be 0 or 1, got '") +
                         ch + "'");
      }
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

ParityMatrix ParityMatrix::from_rows(
    std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void ParityMatrix::check_index(std::size_t i, const char* what) const {
  if (i >= n_) {
    throw UsageError(std::string(what) + " index " + std::to_string(i) +
                     " out of range for a " + std::to_string(n_) + "x" +
                     std::to_string(n_) + " matrix");
  }
}

bool ParityMatrix::get(std::size_t row, std::size_t col) const {
  check_index(row, "row");
  check_index(col, "column");
  return (row_ptr(row)[col / kWordBits] >> (col % kWordBits)) & 1U;
}

void ParityMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_index(row, "row");
  check_index(col, "column");
  const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
  std::uint64_t& word = row_ptr(row)[col / kWordBits];
  word = value ? (word | bit) : (word & ~bit);
}

void ParityMatrix::add_row(std::size_t src, std::size_t dst) {
  check_index(src, "row");
  check_index(dst, "row");
  if (src == dst) {
    throw UsageError("row operation needs two distinct rows, got " +
                     std::to_string(src) + " twice");
  }
  const std::uint64_t* s = row_ptr(src);
  std::uint64_t* d = row_ptr(dst);
  for (std::size_t w = 0; w < words_per_row_; ++w) d[w] ^= s[w];
}

std::size_t ParityMatrix::row_weight(std::size_t row) const {
  check_index(row, "row");
  std::size_t weight = 0;
  const std::uint64_t* r = row_ptr(row);
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    weight += static_cast<std::size_t>(std::popcount(r[w]));
  }
  return weight;
}

std::size_t ParityMatrix::column_weight(std::size_t col) const {
  check_index(col, "column");
  std::size_t weight = 0;
  for (std::size_t r = 0; r < n_; ++r) weight += get(r, col) ? 1 : 0;
  return weight;
}

bool ParityMatrix::is_basis_row(std::size_t row) const {
  return row_weight(row) == 1;
}

bool ParityMatrix::is_basis_column(std::size_t col) const {
  return column_weight(col) == 1;
}

std::size_t ParityMatrix::rank() const {
  ParityMatrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_ && !work.get(pivot, col)) ++pivot;
    if (pivot == n_) continue;
    if (pivot != rank) {
      std::swap_ranges(work.row_ptr(pivot), work.row_ptr(pivot) + words_per_row_,
                       work.row_ptr(rank));
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != rank && work.get(r, col)) work.add_row(rank, r);
    }
    ++rank;
  }
  return rank;
}

bool ParityMatrix::is_permutation() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!is_basis_row(i) || !is_basis_column(i)) return false;
  }
  return true;
}

ParityMatrix ParityMatrix::transposed() const {
  ParityMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

ParityMatrix ParityMatrix::operator*(const ParityMatrix& rhs) const {
  if (rhs.n_ != n_) {
    throw UsageError("cannot multiply a " + std::to_string(n_) + "x" +
                     std::to_string(n_) + " matrix by a " +
                     std::to_string(rhs.n_) + "x" + std::to_string(rhs.n_) +
                     " matrix");
  }
  // Row i of the product is the XOR of the rhs rows selected by row i here.
  ParityMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t* dst = out.row_ptr(i);
    for (std::size_t k = 0; k < n_; ++k) {
      if (!get(i, k)) continue;
      const std::uint64_t* src = rhs.row_ptr(k);
      for (std::size_t w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::string ParityMatrix::str() const {
  std::string out;
  out.reserve(n_ * (n_ + 1));
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------

QubitMap QubitMap::identity(std::size_t n) {
  QubitMap map(n);
  for (std::size_t i = 0; i < n; ++i) map.assignment_[i] = i;
  return map;
}

QubitMap QubitMap::from_assignment(std::vector<std::size_t> assignment) {
  QubitMap map(assignment.size());
  for (std::size_t reg = 0; reg < assignment.size(); ++reg) {
    map.assign(reg, assignment[reg]);
  }
  return map;
}

void QubitMap::assign(std::size_t reg, std::size_t logical) {
  const std::size_t n = assignment_.size();
  if (reg >= n || logical >= n) {
    throw UsageError("map entry " + std::to_string(reg) + " -> " +
                     std::to_string(logical) + " outside [0, " +
                     std::to_string(n) + ")");
  }
  if (assignment_[reg] != kUnassigned) {
    throw UsageError("register " + std::to_string(reg) + " already holds " +
                     std::to_string(assignment_[reg]));
  }
  if (register_of(logical) != kUnassigned) {
    throw UsageError("logical qubit " + std::to_string(logical) +
                     " is already placed");
  }
  assignment_[reg] = logical;
}

bool QubitMap::is_assigned(std::size_t reg) const {
  return reg < assignment_.size() && assignment_[reg] != kUnassigned;
}

std::size_t QubitMap::logical_at(std::size_t reg) const {
  if (reg >= assignment_.size()) {
    throw UsageError("register " + std::to_string(reg) + " out of range");
  }
  return assignment_[reg];
}

std::size_t QubitMap::register_of(std::size_t logical) const {
  const auto it = std::find(assignment_.begin(), assignment_.end(), logical);
  return it == assignment_.end()
             ? kUnassigned
             : static_cast<std::size_t>(it - assignment_.begin());
}

bool QubitMap::is_complete() const {
  return std::none_of(assignment_.begin(), assignment_.end(),
                      [](std::size_t v) { return v == kUnassigned; });
}

bool QubitMap::is_identity() const {
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] != i) return false;
  }
  return true;
}

QubitMap QubitMap::inverse() const {
  if (!is_complete()) throw UsageError("cannot invert an incomplete map");
  QubitMap inv(assignment_.size());
  for (std::size_t reg = 0; reg < assignment_.size(); ++reg) {
    inv.assignment_[assignment_[reg]] = reg;
  }
  return inv;
}

ParityMatrix QubitMap::to_matrix() const {
  if (!is_complete()) {
    throw UsageError("qubit map is incomplete; no permutation matrix");
  }
  ParityMatrix p(assignment_.size());
  for (std::size_t c = 0; c < assignment_.size(); ++c) {
    p.set(assignment_[c], c, true);
  }
  return p;
}

// ---------------------------------------------------------------------------

ParityMatrix apply_row_op(ParityMatrix m, std::size_t src, std::size_t dst) {
  m.add_row(src, dst);
  return m;
}

ParityMatrix circuit_to_parity_matrix(const CnotCircuit& circuit) {
  // Appending CNOT(c, t) to a circuit adds column c into column t of its
  // parity matrix. Over the whole circuit that is the same as applying the
  // row operations row[c] ^= row[t] to the identity in reverse gate order,
  // which keeps the work on packed rows.
  ParityMatrix m = ParityMatrix::identity(circuit.n_qubits());
  const auto gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    m.add_row(it->target, it->control);
  }
  return m;
}

std::vector<std::size_t> solve_row_dependencies(const ParityMatrix& m,
                                                std::size_t pivot_row,
                                                std::size_t excluded_col) {
  const std::size_t n = m.size();
  if (pivot_row >= n || excluded_col >= n) {
    throw UsageError("pivot row/column out of range");
  }
  // Unknown x_i says whether row i takes part in the sum. Equation j (one per
  // column j != excluded_col) is sum_i x_i m[i][j] = m[pivot_row][j], i.e.
  // row j of the transpose with the pivot_row entry acting as right-hand side.
  ParityMatrix system = m.transposed();
  std::vector<std::size_t> equations;
  equations.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j != excluded_col) equations.push_back(j);
  }

  std::vector<std::size_t> pivot_of(n, QubitMap::kUnassigned);
  std::size_t next = 0;
  for (std::size_t unknown = 0; unknown < n; ++unknown) {
    if (unknown == pivot_row) continue;
    std::size_t found = next;
    while (found < equations.size() && !system.get(equations[found], unknown)) {
      ++found;
    }
    if (found == equations.size()) {
      throw InternalError("row dependency system is singular at row " +
                          std::to_string(unknown));
    }
    std::swap(equations[next], equations[found]);
    for (std::size_t e = 0; e < equations.size(); ++e) {
      if (e != next && system.get(equations[e], unknown)) {
        system.add_row(equations[next], equations[e]);
      }
    }
    pivot_of[unknown] = equations[next];
    ++next;
  }

  std::vector<std::size_t> rows;
  for (std::size_t unknown = 0; unknown < n; ++unknown) {
    if (unknown == pivot_row) continue;
    if (system.get(pivot_of[unknown], pivot_row)) rows.push_back(unknown);
  }
  return rows;
}

bool verify_equivalence(const ParityMatrix& original,
                        const CnotCircuit& synthesized,
                        const QubitMap& output_map) {
  return verify_equivalence(original, synthesized, output_map,
                            QubitMap::identity(output_map.size()));
}

bool verify_equivalence(const ParityMatrix& original,
                        const CnotCircuit& synthesized,
                        const QubitMap& output_map,
                        const QubitMap& input_placement) {
  if (!output_map.is_complete() || !input_placement.is_complete()) {
    throw UsageError("verification needs a complete qubit map");
  }
  const std::size_t n = original.size();
  if (synthesized.n_qubits() != n || output_map.size() != n ||
      input_placement.size() != n) {
    throw UsageError("matrix, circuit and map dimensions disagree");
  }
  const ParityMatrix routed = circuit_to_parity_matrix(synthesized);
  return input_placement.to_matrix() * routed *
             output_map.to_matrix().transposed() ==
         original;
}

std::vector<std::string> simulate_parity_labels(const CnotCircuit& circuit,
                                                std::size_t index_base) {
  const ParityMatrix m = circuit_to_parity_matrix(circuit);
  std::vector<std::string> labels(m.size());
  for (std::size_t wire = 0; wire < m.size(); ++wire) {
    for (std::size_t input = 0; input < m.size(); ++input) {
      if (!m.get(input, wire)) continue;
      if (!labels[wire].empty()) labels[wire] += "⊕";
      labels[wire] += std::to_string(input + index_base);
    }
  }
  return labels;
}

}  // namespace prc
