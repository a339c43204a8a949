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

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prc {

/// CNOT(control, target): the target wire becomes control ⊕ target.
struct Cnot {
  std::size_t control = 0;
  std::size_t target = 0;

  friend auto operator<=>(const Cnot&, const Cnot&) = default;
};

/// An ordered list of CNOT gates on a fixed number of qubits.
class CnotCircuit {
 public:
  explicit CnotCircuit(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}
  CnotCircuit(std::size_t n_qubits, std::span<const Cnot> gates);

  /// Throws UsageError if control == target or either index is out of range.
  void add_cnot(std::size_t control, std::size_t target);
  void append(std::span<const Cnot> gates);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  std::span<const Cnot> gates() const noexcept { return gates_; }

  /// Gate order reversed. Since CNOT is self-inverse this is the inverse
  /// circuit.
  CnotCircuit reversed() const;

  friend bool operator==(const CnotCircuit&, const CnotCircuit&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<Cnot> gates_;
};

/// Square matrix over GF(2) with word-packed rows.
///
/// Row i stands for input qubit i and column j for the parity term carried
/// by output wire j. A CNOT(c, t) is the row operation row[c] ^= row[t].
class ParityMatrix {
 public:
  explicit ParityMatrix(std::size_t n = 0);

  static ParityMatrix identity(std::size_t n);
  /// Each string is one row of '0'/'1' characters.
  static ParityMatrix from_rows(std::span<const std::string_view> rows);
  static ParityMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t size() const noexcept { return n_; }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value);

  /// row[dst] ^= row[src]. Throws UsageError on equal or out-of-range rows.
  void add_row(std::size_t src, std::size_t dst);

  std::size_t row_weight(std::size_t row) const;
  std::size_t column_weight(std::size_t col) const;
  /// True when the row has exactly one nonzero entry.
  bool is_basis_row(std::size_t row) const;
  bool is_basis_column(std::size_t col) const;

  std::size_t rank() const;
  bool is_invertible() const { return rank() == n_; }
  bool is_permutation() const;

  ParityMatrix transposed() const;
  ParityMatrix operator*(const ParityMatrix& rhs) const;

  /// One line per row, e.g. "0101\n1111\n...".
  std::string str() const;

  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  static constexpr std::size_t kWordBits = 64;

  const std::uint64_t* row_ptr(std::size_t row) const {
    return words_.data() + row * words_per_row_;
  }
  std::uint64_t* row_ptr(std::size_t row) {
    return words_.data() + row * words_per_row_;
  }
  void check_index(std::size_t i, const char* what) const;

  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Assignment of logical qubits to physical registers, stored as
/// assignment[register] = logical. Used both for where inputs start and for
/// where outputs end up. Entries stay kUnassigned while a synthesis
/// run is still filling the map in.
class QubitMap {
 public:
  static constexpr std::size_t kUnassigned =
      std::numeric_limits<std::size_t>::max();

  explicit QubitMap(std::size_t n = 0) : assignment_(n, kUnassigned) {}

  static QubitMap identity(std::size_t n);
  /// Throws UsageError unless `assignment` is a bijection on [0, n).
  static QubitMap from_assignment(std::vector<std::size_t> assignment);

  std::size_t size() const noexcept { return assignment_.size(); }

  /// Throws UsageError if the register is taken or the logical qubit is
  /// already placed elsewhere.
  void assign(std::size_t reg, std::size_t logical);
  bool is_assigned(std::size_t reg) const;
  std::size_t logical_at(std::size_t reg) const;
  /// Register holding `logical`, or kUnassigned.
  std::size_t register_of(std::size_t logical) const;

  bool is_complete() const;
  bool is_identity() const;
  QubitMap inverse() const;
  const std::vector<std::size_t>& assignment() const noexcept {
    return assignment_;
  }

  /// Permutation matrix with P[assignment[r]][r] = 1, i.e. logical by
  /// register. Requires a complete map.
  ParityMatrix to_matrix() const;

  friend bool operator==(const QubitMap&, const QubitMap&) = default;

 private:
  std::vector<std::size_t> assignment_;
};

/// Value-returning form of ParityMatrix::add_row: row[dst] ^= row[src].
ParityMatrix apply_row_op(ParityMatrix m, std::size_t src, std::size_t dst);

/// Parity matrix of a circuit: column j lists the input qubits whose sum
/// appears on output wire j.
ParityMatrix circuit_to_parity_matrix(const CnotCircuit& circuit);

/// Rows (other than `pivot_row`) whose GF(2) sum equals `pivot_row` on every
/// column except `excluded_col`. Returned in ascending order.
///
/// Throws InternalError when the reduced system is singular, which cannot
/// happen for an invertible matrix whose `excluded_col` is the basis vector
/// at `pivot_row`.
std::vector<std::size_t> solve_row_dependencies(const ParityMatrix& m,
                                                std::size_t pivot_row,
                                                std::size_t excluded_col);

/// circuit_to_parity_matrix(synthesized) * P^T == original, P being
/// output_map.to_matrix(): logical wire j of the original ends on register
/// output_map.register_of(j).
bool verify_equivalence(const ParityMatrix& original,
                        const CnotCircuit& synthesized,
                        const QubitMap& output_map);

/// As above for a circuit whose inputs start permuted: logical qubit i enters
/// on register input_placement.register_of(i). Checks Q * N * P^T == original.
bool verify_equivalence(const ParityMatrix& original,
                        const CnotCircuit& synthesized,
                        const QubitMap& output_map,
                        const QubitMap& input_placement);

/// Output parity of each wire as a sorted "a⊕b⊕c" label. `index_base`
/// offsets the printed qubit numbers (1 for 1-based labels).
std::vector<std::string> simulate_parity_labels(const CnotCircuit& circuit,
                                                std::size_t index_base = 0);

}  // namespace prc
