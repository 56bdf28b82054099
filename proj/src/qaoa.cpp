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

#include "qtk/qaoa.hpp"

#include <cmath>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void QaoaParams::validate() const {
  if (gammas.size() != betas.size())
    throw ValidationError("QaoaParams: gamma and beta lengths differ");
}

std::vector<double> QaoaParams::flatten() const {
  std::vector<double> flat = gammas;
  flat.insert(flat.end(), betas.begin(), betas.end());
  return flat;
}

QaoaParams QaoaParams::from_flat(const std::vector<double>& flat) {
  if (flat.size() % 2 != 0) throw ValidationError("QaoaParams: odd flat vector");
  const std::size_t p = flat.size() / 2;
  QaoaParams out;
  out.gammas.assign(flat.begin(), flat.begin() + p);
  out.betas.assign(flat.begin() + p, flat.end());
  return out;
}

QState qaoa_state(const IsingProblem& p, const QaoaParams& params) {
  params.validate();
  const int n = p.num_spins();
  if (n > kDefaultQubitCap) throw CapExceeded("qaoa_state: problem exceeds the qubit cap");
  const std::vector<double> cost = p.energy_table();

  QState state = QState::plus_state(n);
  for (int layer = 0; layer < params.depth(); ++layer) {
    const double gamma = params.gammas[layer];
    auto& amps = state.amplitudes();
    for (std::uint64_t z = 0; z < amps.size(); ++z)
      amps[z] *= std::exp(cdouble{0, -gamma * cost[z]});
    // e^{-i beta sum X} = prod RX(2 beta)
    const GateSpec mixer = gates::RX(2.0 * params.betas[layer]);
    for (int q = 0; q < n; ++q) apply_gate_inplace(state, mixer, {q});
  }
  return state;
}

double qaoa_expectation(const IsingProblem& p, const QaoaParams& params) {
  const QState state = qaoa_state(p, params);
  const std::vector<double> cost = p.energy_table();
  double e = 0.0;
  for (std::uint64_t z = 0; z < state.dim(); ++z) e += std::norm(state.amplitude(z)) * cost[z];
  return e;
}

Circuit compile_qaoa_circuit(const IsingProblem& p, const QaoaParams& params) {
  params.validate();
  const int n = p.num_spins();
  Circuit c{n, {}};
  for (int q = 0; q < n; ++q) c.append("H", {q});
  for (int layer = 0; layer < params.depth(); ++layer) {
    const double gamma = params.gammas[layer];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double coupling = p.coupling(i, j);
        if (coupling == 0.0) continue;
        // e^{-i gamma J Z_i Z_j} = CNOT(i,j) RZ_j(2 gamma J) CNOT(i,j),
        // with each CNOT as H_j CZ H_j.
        c.append("H", {j});
        c.append("CZ", {i, j});
        c.append("H", {j});
        c.append("RZ", {j}, {2.0 * gamma * coupling});
        c.append("H", {j});
        c.append("CZ", {i, j});
        c.append("H", {j});
      }
      if (p.field(i) != 0.0) c.append("RZ", {i}, {2.0 * gamma * p.field(i)});
    }
    for (int q = 0; q < n; ++q) c.append("RX", {q}, {2.0 * params.betas[layer]});
  }
  return c;
}

QaoaResult qaoa_optimize(const IsingProblem& p, int depth, const QaoaOptimizeOptions& opts,
                         Rng& rng) {
  if (depth < 1) throw ValidationError("qaoa_optimize: depth must be >= 1");
  const bool maximize = p.sense() == OptimizationSense::kMaximize;
  const double sign = maximize ? -1.0 : 1.0;

  const ObjectiveFn objective = [&](const std::vector<double>& flat) {
    return sign * qaoa_expectation(p, QaoaParams::from_flat(flat));
  };

  MultiStartOptions ms;
  ms.restarts = opts.restarts;
  ms.local.max_iterations = opts.max_iterations;
  ms.local.tolerance = opts.tolerance;
  ms.lower.assign(2 * depth, 0.0);
  ms.upper.assign(2 * depth, 0.0);
  for (int k = 0; k < depth; ++k) {
    ms.upper[k] = 2.0 * kPi;        // gamma
    ms.upper[depth + k] = kPi;      // beta
  }
  for (const auto& seed : opts.seeds) {
    seed.validate();
    if (seed.depth() != depth) throw ValidationError("qaoa_optimize: seed depth mismatch");
    ms.seeds.push_back(seed.flatten());
  }

  const NelderMeadResult best = nelder_mead_multistart(objective, 2 * depth, ms, rng);

  QaoaResult result;
  result.params = QaoaParams::from_flat(best.x);
  result.expectation = sign * best.value;
  result.converged = best.converged;

  const QState state = qaoa_state(p, result.params);
  const std::vector<double> cost = p.energy_table();
  const GroundResult ground = brute_force_ground(p);

  for (const std::uint64_t z : ground.optimizers)
    result.success_probability += std::norm(state.amplitude(z));

  std::vector<double> probs(state.dim());
  for (std::uint64_t z = 0; z < state.dim(); ++z) probs[z] = std::norm(state.amplitude(z));
  std::uint64_t best_z = 0;
  if (opts.shots == 0) {
    // No sampling requested: report the most likely string instead.
    for (std::uint64_t z = 1; z < state.dim(); ++z)
      if (probs[z] > probs[best_z]) best_z = z;
  } else {
    bool have_best = false;
    for (std::uint64_t shot = 0; shot < opts.shots; ++shot) {
      const std::uint64_t z = random_discrete(rng, probs);
      const bool better =
          !have_best || (maximize ? cost[z] > cost[best_z] : cost[z] < cost[best_z]);
      if (better) {
        best_z = z;
        have_best = true;
      }
    }
  }
  result.best_bitstring = bits_to_string(best_z, p.num_spins());
  result.best_cost = cost[best_z];
  if (ground.optimal_energy != 0.0) {
    result.approximation_ratio = result.best_cost / ground.optimal_energy;
  } else {
    // A zero optimum makes the literal ratio undefined; report exact hits.
    result.approximation_ratio = result.best_cost == 0.0 ? 1.0 : 0.0;
  }
  return result;
}

}  // namespace qtk
