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
#include <string>
#include <vector>

#include "qtk/circuit.hpp"
#include "qtk/ising.hpp"
#include "qtk/neldermead.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// Angles of a depth-p variational state: prod_k e^{-i beta_k H_M} e^{-i gamma_k H_C} |+>^n,
/// with H_M = sum_i X_i and H_C the diagonal cost.
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return static_cast<int>(gammas.size()); }
  void validate() const;
  /// Flat [gamma_1..gamma_p, beta_1..beta_p] layout used by the optimizer.
  std::vector<double> flatten() const;
  static QaoaParams from_flat(const std::vector<double>& flat);
};

/// The variational state for the given problem and angles.
QState qaoa_state(const IsingProblem& p, const QaoaParams& params);

/// <gamma, beta | H_C | gamma, beta> = sum_z Prob_z C(z), computed exactly.
double qaoa_expectation(const IsingProblem& p, const QaoaParams& params);

/// Compiles the variational state onto the gate set {H, RX, RZ, CZ}: ZZ terms
/// as CNOT-RZ-CNOT sandwiches with each CNOT rewritten through CZ and
/// Hadamards. Simulating the circuit reproduces qaoa_state up to global phase.
Circuit compile_qaoa_circuit(const IsingProblem& p, const QaoaParams& params);

struct QaoaOptimizeOptions {
  int restarts = 20;
  int max_iterations = 2000;
  double tolerance = 1e-8;
  std::uint64_t shots = 2048;  // samples drawn for the best-bitstring report
  /// Optional warm-start angle sets tried before random restarts.
  std::vector<QaoaParams> seeds;
};

struct QaoaResult {
  QaoaParams params;
  double expectation = 0.0;          // in the problem's own sense
  std::string best_bitstring;        // best C(z) among sampled strings
  double best_cost = 0.0;
  double approximation_ratio = 0.0;  // C(z_best) / C_opt
  double success_probability = 0.0;  // mass on the exact optimizers
  bool converged = false;
};

/// Multi-start derivative-free optimization of the (sense-adjusted)
/// expectation, plus sampling-based reporting.
QaoaResult qaoa_optimize(const IsingProblem& p, int depth, const QaoaOptimizeOptions& opts,
                         Rng& rng);

}  // namespace qtk
