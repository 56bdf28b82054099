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

#include "qtk/vqe.hpp"

#include <cmath>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void VqeProblem::validate() const {
  if (num_qubits < 1) throw ValidationError("VqeProblem needs at least one qubit");
  if (depth < 0) throw ValidationError("VqeProblem: negative depth");
  if (terms.empty()) throw ValidationError("VqeProblem: empty term list");
  for (const auto& [coeff, pauli] : terms) {
    (void)coeff;
    if (pauli.num_qubits() != num_qubits)
      throw ValidationError("VqeProblem: term width mismatch");
    if (!pauli.is_hermitian()) throw ValidationError("VqeProblem: non-Hermitian term");
  }
}

QState vqe_trial_state(const VqeProblem& prob, const std::vector<double>& params) {
  prob.validate();
  if (static_cast<int>(params.size()) != prob.parameter_count())
    throw ValidationError("vqe_trial_state: expected n(3d+2) parameters");
  const int n = prob.num_qubits;
  QState state(n);
  std::size_t next = 0;
  // Layer 0 on |0...0>: RX then RZ per qubit (2 angles).
  for (int q = 0; q < n; ++q) {
    apply_gate_inplace(state, gates::RX(params[next++]), {q});
    apply_gate_inplace(state, gates::RZ(params[next++]), {q});
  }
  for (int rep = 0; rep < prob.depth; ++rep) {
    for (int q = 0; q + 1 < n; ++q) apply_gate_inplace(state, gates::CZ(), {q, q + 1});
    // Full Euler layer: RZ RX RZ per qubit (3 angles).
    for (int q = 0; q < n; ++q) {
      apply_gate_inplace(state, gates::RZ(params[next++]), {q});
      apply_gate_inplace(state, gates::RX(params[next++]), {q});
      apply_gate_inplace(state, gates::RZ(params[next++]), {q});
    }
  }
  return state;
}

double vqe_energy(const VqeProblem& prob, const QState& state, std::uint64_t shots, Rng* rng) {
  double energy = 0.0;
  for (const auto& [coeff, pauli] : prob.terms) {
    PauliString observable = pauli;
    double sign = 1.0;
    if (observable.phase_exp() == 2) {
      sign = -1.0;
      observable.set_phase_exp(0);
    }
    const double exact = expectation_pauli(state, observable);
    if (shots == 0) {
      energy += coeff * sign * exact;
    } else {
      if (rng == nullptr) throw ValidationError("vqe_energy: shots > 0 needs an rng");
      // Simulate measuring the observable `shots` times.
      const double p_plus = 0.5 * (1.0 + exact);
      std::uint64_t plus = 0;
      for (std::uint64_t s = 0; s < shots; ++s) plus += random_unit(*rng) < p_plus ? 1 : 0;
      const double estimate =
          2.0 * static_cast<double>(plus) / static_cast<double>(shots) - 1.0;
      energy += coeff * sign * estimate;
    }
  }
  return energy;
}

VqeResult vqe_optimize(const VqeProblem& prob, const VqeOptions& opts, Rng& rng) {
  prob.validate();
  const int dim = prob.parameter_count();

  const ObjectiveFn objective = [&](const std::vector<double>& params) {
    const QState state = vqe_trial_state(prob, params);
    return vqe_energy(prob, state, opts.shots, &rng);
  };

  MultiStartOptions ms;
  ms.restarts = opts.restarts;
  ms.local.max_iterations = opts.max_iterations;
  ms.local.tolerance = opts.tolerance;
  ms.lower.assign(dim, 0.0);
  ms.upper.assign(dim, 2.0 * kPi);

  const NelderMeadResult best = nelder_mead_multistart(objective, dim, ms, rng);
  VqeResult result;
  result.params = best.x;
  result.converged = best.converged;
  // Report the exact energy of the best parameters even in shot-noise mode.
  result.energy = vqe_energy(prob, vqe_trial_state(prob, best.x));
  return result;
}

}  // namespace qtk
