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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qtk {

/// A phase-tracked n-qubit Pauli operator  i^phase_exp * P_0 x P_1 x ... x P_{n-1},
/// with P_q in {I, X, Y, Z} encoded as per-qubit (x, z) bit pairs:
/// (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. The factor i of Y is folded into the
/// single-qubit operator, so a string is Hermitian exactly when
/// phase_exp is 0 or 2 (sign +1 or -1).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : n_(n), x_(n, 0), z_(n, 0), phase_(0) {}

  /// Parses labels like "XIZ", "-YY", "iZ", "-iXX".
  static PauliString from_label(const std::string& label);

  /// Single-qubit Pauli embedded in n qubits; p is one of 'I','X','Y','Z'.
  static PauliString single(int n, int qubit, char p);

  static PauliString identity(int n) { return PauliString(n); }

  int num_qubits() const { return n_; }
  int phase_exp() const { return phase_; }
  void set_phase_exp(int p) { phase_ = ((p % 4) + 4) % 4; }
  bool x_bit(int q) const { return x_[q] != 0; }
  bool z_bit(int q) const { return z_[q] != 0; }
  void set_x(int q, bool v) { x_[q] = v ? 1 : 0; }
  void set_z(int q, bool v) { z_[q] = v ? 1 : 0; }

  bool is_identity() const;
  /// True when phase_exp is even (operator = +/- tensor of Paulis).
  bool is_hermitian() const { return phase_ % 2 == 0; }
  /// +1 or -1; only meaningful for Hermitian strings.
  int sign() const { return phase_ == 0 ? +1 : -1; }
  /// Number of qubits acted on nontrivially.
  int weight() const;

  /// Scalar factor i^phase_exp as a complex number.
  std::complex<double> phase_factor() const;

  PauliString operator*(const PauliString& other) const;
  PauliString adjoint() const;
  bool operator==(const PauliString& other) const;

  /// Equality of the Pauli tensor, ignoring the phase.
  bool equal_up_to_phase(const PauliString& other) const;

  std::string label() const;

  /// Dense 2^n x 2^n matrix, row-major. Intended for small n only.
  std::vector<std::complex<double>> to_matrix() const;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
  int phase_ = 0;  // exponent of i, mod 4
};

/// True iff the symplectic inner product of the (x, z) vectors is even.
bool pauli_commutes(const PauliString& p, const PauliString& q);

/// One Clifford gate from the generating set (plus the Paulis and CZ).
struct CliffordOp {
  enum class Kind { H, S, X, Y, Z, CNOT, CZ };
  Kind kind;
  int a = 0;       // target, or control for two-qubit kinds
  int b = -1;      // second qubit for CNOT/CZ

  static CliffordOp h(int q) { return {Kind::H, q, -1}; }
  static CliffordOp s(int q) { return {Kind::S, q, -1}; }
  static CliffordOp x(int q) { return {Kind::X, q, -1}; }
  static CliffordOp y(int q) { return {Kind::Y, q, -1}; }
  static CliffordOp z(int q) { return {Kind::Z, q, -1}; }
  static CliffordOp cnot(int control, int target) { return {Kind::CNOT, control, target}; }
  static CliffordOp cz(int a, int b) { return {Kind::CZ, a, b}; }
};

/// Returns U P U^dagger with exact phase tracking.
PauliString conjugate_clifford(const CliffordOp& op, const PauliString& p);

}  // namespace qtk
