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
#include <utility>
#include <vector>

#include "qtk/neldermead.hpp"
#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// Weighted-Pauli Hamiltonian with a hardware-efficient ansatz: alternating
/// per-qubit Euler rotations and a fixed CZ-line entangler, d repetitions plus
/// a final rotation layer. The first layer carries 2 angles per qubit (RX
/// then RZ; a leading RZ on |0> is a phase) and later layers 3, for a total
/// of n (3d + 2) parameters.
struct VqeProblem {
  std::vector<std::pair<double, PauliString>> terms;
  int num_qubits = 0;
  int depth = 1;  // entangler repetitions d

  void validate() const;
  int parameter_count() const { return num_qubits * (3 * depth + 2); }
};

/// Trial state for the given parameter vector (length must be n(3d+2)).
QState vqe_trial_state(const VqeProblem& prob, const std::vector<double>& params);

/// Energy sum_a h_a <P_a>, exact by default; with shots > 0 each expectation
/// is replaced by a binomial estimate from that many simulated measurements.
double vqe_energy(const VqeProblem& prob, const QState& state, std::uint64_t shots = 0,
                  Rng* rng = nullptr);

struct VqeOptions {
  int restarts = 20;
  int max_iterations = 4000;
  double tolerance = 1e-10;
  std::uint64_t shots = 0;  // 0 = exact expectations
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> params;
  bool converged = false;
};

VqeResult vqe_optimize(const VqeProblem& prob, const VqeOptions& opts, Rng& rng);

}  // namespace qtk
