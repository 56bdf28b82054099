// Copyright 2026 The qtk Authors
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
#include <vector>

#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// Stabilizer/destabilizer tableau for n qubits: rows 0..n-1 are
/// destabilizers, rows n..2n-1 are stabilizers. Fresh tableaus represent
/// |0...0> with destabilizers X_i and stabilizers Z_i. Destabilizer row i
/// anticommutes with stabilizer row i and commutes with every other row.
///
/// Rows are stored as flat x/z bit matrices with a mod-4 phase per row, so a
/// Clifford gate costs O(n) and a measurement O(n^2).
class Tableau {
 public:
  explicit Tableau(int n);

  int num_qubits() const { return n_; }

  /// Row as a phase-tracked Pauli string (row 0..n-1 destabilizers, then
  /// stabilizers).
  PauliString row(int i) const;
  PauliString destabilizer(int i) const { return row(i); }
  PauliString stabilizer(int i) const { return row(n_ + i); }
  /// Sign of stabilizer row i: +1 or -1.
  int stabilizer_sign(int i) const { return phase_[n_ + i] == 0 ? +1 : -1; }

  /// Conjugates every row by the Clifford gate.
  void apply(const CliffordOp& op);

  struct MeasureResult {
    int outcome;         // 0 or 1
    bool deterministic;  // true when Z_q commutes with all stabilizers
  };

  /// Computational-basis measurement of qubit q. Random outcomes pivot on the
  /// anticommuting stabilizer with the lowest row index.
  MeasureResult measure(int q, Rng& rng);

  /// Like measure(), but a random outcome is forced to `forced_outcome`
  /// (branch-enumeration hook; deterministic outcomes ignore the hint).
  MeasureResult measure_forced(int q, int forced_outcome);

  /// Checks commutation structure, independence, and row sign validity.
  bool invariants_hold() const;

 private:
  MeasureResult measure_impl(int q, const int* forced, Rng* rng);
  void row_mult(int dst, int src);  // row_dst = row_dst * row_src

  int n_;
  std::vector<std::vector<std::uint8_t>> x_;  // [2n][n]
  std::vector<std::vector<std::uint8_t>> z_;  // [2n][n]
  std::vector<std::uint8_t> phase_;           // exponent of i mod 4; 0 or 2 on valid rows
};

Tableau tableau_new(int n);
void tableau_apply(Tableau& t, const CliffordOp& op);

/// The unique state (up to global phase) stabilized by all stabilizer rows.
/// Requires n <= 12.
QState tableau_to_statevector(const Tableau& t);

}  // namespace qtk
