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

#include <functional>
#include <utility>
#include <vector>

#include "qtk/ising.hpp"
#include "qtk/pauli.hpp"
#include "qtk/qaoa.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// Interpolation schedule H(s) = A(s) (-sum X) + B(s) H_C with s = t/tau.
/// The default is the linear ramp A = 1-s, B = s.
struct AnnealSchedule {
  std::function<double(double)> a = [](double s) { return 1.0 - s; };
  std::function<double(double)> b = [](double s) { return s; };
  double tau = 1.0;  // total annealing time
  int steps = 1;     // Trotter step count
};

struct AnnealResult {
  QState state;
  double success_probability = 0.0;  // mass on the exact optimizers
};

/// Second-order (symmetrized) Trotter evolution of |+>^n under the schedule,
/// with midpoint coefficients s_k = (k - 1/2)/steps. For maximize-sense
/// problems the diagonal is negated so the ground state encodes the optimum.
AnnealResult anneal_evolve(const IsingProblem& p, const AnnealSchedule& sched);

/// Maps one Trotterized annealing run onto QAOA angles, with
/// tau the Trotter step size:
///   s_k = (k-1/2)/N, gamma_k = tau B(s_k),
///   beta_k = -tau (A(s_{k+1}) + A(s_k))/2 for k < N, beta_N = -tau A(s_N)/2.
QaoaParams qa_to_qaoa_angles(const AnnealSchedule& sched, int num_steps, double tau);

/// T99 = ln(0.01)/ln(1-p) * tau, unrounded; p >= 0.99 clamps to tau.
double time_to_solution(double p_success, double tau);

/// Weighted Pauli-string Hamiltonian terms.
using HamiltonianTerms = std::vector<std::pair<double, PauliString>>;

struct GapScanResult {
  std::vector<double> s_values;
  std::vector<double> gaps;  // E1 - E0 at each s
  double min_gap = 0.0;
  double s_at_min = 0.0;
};

/// Diagonalizes (1-s) H0 + s H1 on a uniform grid with the given resolution
/// and records the gap between the two lowest eigenvalues. Dense; n <= 10.
GapScanResult gap_scan(const HamiltonianTerms& h0, const HamiltonianTerms& h1,
                       double resolution);

}  // namespace qtk
