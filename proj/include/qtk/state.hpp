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
#include <map>
#include <string>
#include <vector>

#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"

namespace qtk {

using cdouble = std::complex<double>;

/// Default upper bound on register width; bounds memory at 1 GiB of amplitudes.
inline constexpr int kDefaultQubitCap = 26;

/// Dense normalized amplitude vector over n qubits.
///
/// Basis convention: qubit 0 is the leftmost ket factor and the most
/// significant bit of the basis index, so |j1 j2 ... jn> has index
/// j1*2^(n-1) + ... + jn*2^0, matching standard binary labels.
class QState {
 public:
  /// |0...0> on n qubits.
  explicit QState(int num_qubits, int qubit_cap = kDefaultQubitCap);

  /// Takes ownership of an amplitude vector (length must be a power of two).
  QState(int num_qubits, std::vector<cdouble> amplitudes);

  /// Basis state |index>.
  static QState basis_state(int num_qubits, std::uint64_t index);

  /// Single-qubit state alpha|0> + beta|1>; input must be normalized.
  static QState one_qubit(cdouble alpha, cdouble beta);

  /// |+>^n.
  static QState plus_state(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  std::vector<cdouble>& amplitudes() { return amps_; }
  cdouble amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm_squared() const;
  void normalize();

  /// Value of qubit q in basis index z under the MSB-first convention.
  bool index_bit(std::uint64_t z, int q) const {
    return (z >> (num_qubits_ - 1 - q)) & 1u;
  }

  /// Probability of measuring qubit q as 1.
  double prob_one(int q) const;

 private:
  int num_qubits_;
  std::vector<cdouble> amps_;
};

struct GateSpec;  // gates.hpp

/// Returns the embedding of gate.matrix on the target qubits applied to state.
/// Targets are distinct, in range, and count must equal the gate arity;
/// targets[0] is the gate's most significant qubit.
QState apply_gate(const QState& state, const GateSpec& gate, const std::vector<int>& targets);

/// In-place variant.
void apply_gate_inplace(QState& state, const GateSpec& gate, const std::vector<int>& targets);

/// Applies a phase-tracked Pauli operator to the state (exact, O(2^n)).
QState apply_pauli(const QState& state, const PauliString& p);

/// Projective computational-basis measurement of qubit q.
std::pair<int, QState> measure_qubit(const QState& state, int q, Rng& rng);

/// Forces the given outcome; returns its probability and the renormalized
/// projection (test/branch-enumeration hook). Probability may be ~0, in which
/// case the returned state is invalid and must not be used.
std::pair<double, QState> measure_qubit_forced(const QState& state, int q, int outcome);

/// Projective measurement of qubit q in the orthonormal basis {b0, b1},
/// given as two 2-vectors. Outcome 0 collapses onto b0.
std::pair<int, QState> measure_qubit_in_basis(const QState& state, int q,
                                              const cdouble b0[2], const cdouble b1[2],
                                              Rng& rng);
std::pair<double, QState> measure_qubit_in_basis_forced(const QState& state, int q,
                                                        const cdouble b0[2], const cdouble b1[2],
                                                        int outcome);

/// Measures the Hermitian Pauli observable G projectively via (I +/- G)/2.
/// Returns (sign in {+1,-1}, probability of that sign, post state).
std::tuple<int, double, QState> measure_pauli_observable(const QState& state,
                                                         const PauliString& g, Rng& rng);
std::pair<double, QState> measure_pauli_observable_forced(const QState& state,
                                                          const PauliString& g, int sign);

/// Multinomial sample from |amplitude|^2; keys are MSB-first bitstrings.
std::map<std::string, std::uint64_t> sample_counts(const QState& state, std::uint64_t shots,
                                                   Rng& rng);

/// <psi| P |psi>; asserts the imaginary residue is below 1e-10 and drops it.
double expectation_pauli(const QState& state, const PauliString& p);

/// <phi|psi>.
cdouble inner_product(const QState& phi, const QState& psi);

/// |<phi|psi>|^2 — the global-phase-free notion of state equality.
double fidelity(const QState& phi, const QState& psi);

/// Kronecker product: a is the more significant register.
QState tensor(const QState& a, const QState& b);

/// Contracts <basis_vec|_q psi and renormalizes; the state must factorize as
/// |basis_vec>_q (x) rest, as it does right after a projective measurement.
QState remove_qubit(const QState& state, int q, const cdouble basis_vec[2]);

/// Extracts the post-measurement single-qubit state of qubit q assuming the
/// state factorizes there.
QState extract_qubit(const QState& state, int q);

}  // namespace qtk
