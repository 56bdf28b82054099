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

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtk/circuit.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// A Boolean function on n-bit strings held as an explicit truth table and
/// applied to states as the diagonal phase mask (-1)^f(x). The promise tag is
/// checked eagerly at construction.
class BooleanOracle {
 public:
  enum class Promise { kConstantOrBalanced, kSingleMarked, kGeneral };

  BooleanOracle(int n, std::vector<std::uint8_t> table, Promise promise);

  /// Oracle from a callable (n <= 20 guarded by the table size).
  static BooleanOracle from_function(int n, const std::function<bool(std::uint64_t)>& f,
                                     Promise promise);

  /// Single-marked oracle for item x0.
  static BooleanOracle marked_item(int n, std::uint64_t x0);

  int num_bits() const { return n_; }
  bool value(std::uint64_t x) const { return table_[x] != 0; }
  Promise promise() const { return promise_; }
  /// The unique marked item; only valid under the single-marked promise.
  std::uint64_t marked() const;

  /// Applies the phase mask |x> -> (-1)^f(x) |x> in place.
  void apply_phase(QState& state) const;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
  Promise promise_;
};

enum class DeutschJozsaAnswer { kConstant, kBalanced };

/// One phase-oracle query decides constant vs balanced.
DeutschJozsaAnswer deutsch_jozsa(const BooleanOracle& oracle);

/// Iteration count maximizing sin^2((k+1/2) theta), theta = 2 asin(sqrt(M/N));
/// ties break toward smaller k.
int grover_iterations(std::uint64_t num_items, std::uint64_t num_marked);

struct GroverResult {
  std::string sampled_bitstring;
  double success_probability;  // |<x0|state>|^2 after k iterations
};

/// H^(x)n then k Grover operators G = (2|psi><psi| - 1) O.
GroverResult grover_search(int n, const BooleanOracle& oracle, int iterations, Rng& rng);

/// Probability sin^2((k+1/2) theta) from the two-dimensional rotation picture.
double grover_success_closed_form(std::uint64_t num_items, std::uint64_t num_marked, int k);

/// QFT circuit on n qubits: H and controlled-R_k gates plus final SWAPs.
/// The dense unitary has entries e^{2 pi i jk / 2^n} / sqrt(2^n).
Circuit qft_circuit(int n);

/// Inverse transform: every rotation phase conjugated, gates reversed.
Circuit qft_inverse_circuit(int n);

/// Counting-register sizing for phase estimation.
struct PhaseEstConfig {
  int t;        // counting qubits
  int n_bits;   // requested precision
  double epsilon;

  /// t = n_bits + ceil(log2(2 + 1/(2 epsilon))).
  static PhaseEstConfig from_precision(int n_bits, double epsilon);
  static PhaseEstConfig with_register(int t);
};

struct PhaseEstResult {
  std::vector<double> distribution;  // probability of each k in [0, 2^t)
  std::uint64_t mode;                // argmax of the distribution
  std::vector<std::uint64_t> samples;
};

/// Textbook phase estimation with the controlled powers U^{2^j} simulated
/// exactly by repeated squaring of the dense unitary. The system register may
/// hold at most 8 qubits. When `require_eigenstate` is set, the initial state
/// must satisfy ||U psi - lambda psi|| <= 1e-8.
PhaseEstResult phase_estimate(const Eigen::MatrixXcd& u, const QState& eigenstate,
                              const PhaseEstConfig& cfg, std::uint64_t shots, Rng& rng,
                              bool require_eigenstate = true);

struct HadamardTestResult {
  double p0;
  double p1;
  double estimate;  // p0 - p1
};

/// p0 - p1 = Re<psi|Q|psi>, or Im<psi|Q|psi> with the imaginary flag.
HadamardTestResult hadamard_test(const Circuit& q_circuit, const QState& psi, bool imaginary);

/// Probability of measuring 0 in the swap test: (1 + |<f|g>|^2) / 2.
/// Simulated as the actual ancilla + Fredkin circuit.
double swap_test(const QState& f, const QState& g);

}  // namespace qtk
