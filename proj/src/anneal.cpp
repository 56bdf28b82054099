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

#include "qtk/anneal.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

AnnealResult anneal_evolve(const IsingProblem& p, const AnnealSchedule& sched) {
  const int n = p.num_spins();
  if (n > kDefaultQubitCap) throw CapExceeded("anneal_evolve: problem exceeds the qubit cap");
  if (sched.steps < 1) throw ValidationError("anneal_evolve: steps must be >= 1");
  if (sched.tau <= 0.0) throw ValidationError("anneal_evolve: tau must be positive");

  const bool maximize = p.sense() == OptimizationSense::kMaximize;
  std::vector<double> cost = p.energy_table();
  if (maximize)
    for (double& c : cost) c = -c;

  const double dt = sched.tau / sched.steps;
  QState state = QState::plus_state(n);
  for (int k = 1; k <= sched.steps; ++k) {
    const double s = (k - 0.5) / sched.steps;
    const double a = sched.a(s), b = sched.b(s);
    // Strang step: e^{+i dt a H_x/2} e^{-i dt b H_C} e^{+i dt a H_x/2},
    // where the driver is H_0 = -H_x = -sum X.
    const GateSpec half_mixer = gates::RX(-dt * a);  // e^{+i (dt a / 2) X}
    for (int q = 0; q < n; ++q) apply_gate_inplace(state, half_mixer, {q});
    auto& amps = state.amplitudes();
    for (std::uint64_t z = 0; z < amps.size(); ++z)
      amps[z] *= std::exp(cdouble{0, -dt * b * cost[z]});
    for (int q = 0; q < n; ++q) apply_gate_inplace(state, half_mixer, {q});
  }

  AnnealResult result{std::move(state), 0.0};
  const GroundResult ground = brute_force_ground(p);
  for (const std::uint64_t z : ground.optimizers)
    result.success_probability += std::norm(result.state.amplitude(z));
  return result;
}

QaoaParams qa_to_qaoa_angles(const AnnealSchedule& sched, int num_steps, double tau) {
  if (num_steps < 1) throw ValidationError("qa_to_qaoa_angles: steps must be >= 1");
  QaoaParams params;
  params.gammas.resize(num_steps);
  params.betas.resize(num_steps);
  auto s_of = [&](int k) { return (k - 0.5) / num_steps; };
  for (int k = 1; k <= num_steps; ++k) {
    params.gammas[k - 1] = tau * sched.b(s_of(k));
    if (k < num_steps) {
      params.betas[k - 1] = -tau * (sched.a(s_of(k + 1)) + sched.a(s_of(k))) / 2.0;
    } else {
      params.betas[k - 1] = -tau * sched.a(s_of(num_steps)) / 2.0;
    }
  }
  return params;
}

double time_to_solution(double p_success, double tau) {
  if (p_success <= 0.0 || p_success > 1.0)
    throw ValidationError("time_to_solution requires 0 < p <= 1");
  if (p_success >= 0.99) return tau;  // one run already reaches 99%
  return std::log(0.01) / std::log(1.0 - p_success) * tau;
}

namespace {

Eigen::MatrixXcd terms_to_matrix(const HamiltonianTerms& terms, int n) {
  const auto dim = static_cast<Eigen::Index>(std::int64_t{1} << n);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [coeff, pauli] : terms) {
    if (pauli.num_qubits() != n) throw ValidationError("gap_scan: mixed term widths");
    if (!pauli.is_hermitian()) throw ValidationError("gap_scan: terms must be Hermitian");
    const auto dense = pauli.to_matrix();
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c) h(r, c) += coeff * dense[r * dim + c];
  }
  return h;
}

}  // namespace

GapScanResult gap_scan(const HamiltonianTerms& h0, const HamiltonianTerms& h1,
                       double resolution) {
  if (h0.empty() || h1.empty()) throw ValidationError("gap_scan: empty Hamiltonian");
  if (resolution <= 0.0 || resolution > 0.5)
    throw ValidationError("gap_scan: resolution out of range");
  const int n = h0.front().second.num_qubits();
  if (n > 10) throw CapExceeded("gap_scan: dense diagonalization capped at 10 qubits");

  const Eigen::MatrixXcd m0 = terms_to_matrix(h0, n);
  const Eigen::MatrixXcd m1 = terms_to_matrix(h1, n);
  const auto grid = static_cast<std::size_t>(std::llround(1.0 / resolution));

  GapScanResult result;
  result.s_values.reserve(grid + 1);
  result.gaps.reserve(grid + 1);
  result.min_gap = std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(grid);
    solver.compute((1.0 - s) * m0 + s * m1, Eigen::EigenvaluesOnly);
    const double gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
    result.s_values.push_back(s);
    result.gaps.push_back(gap);
    if (gap < result.min_gap) {
      result.min_gap = gap;
      result.s_at_min = s;
    }
  }
  return result;
}

}  // namespace qtk
