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

#include "qtk/mbqc.hpp"

#include <cmath>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

void ClusterGraph::validate() const {
  if (num_nodes < 1) throw ValidationError("cluster graph needs at least one node");
  if (num_inputs < 0 || num_inputs > num_nodes)
    throw ValidationError("cluster graph input count out of range");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes || a == b)
      throw ValidationError("cluster graph edge out of range");
  }
}

QState build_cluster(const ClusterGraph& graph, const QState& inputs) {
  graph.validate();
  if (inputs.num_qubits() != graph.num_inputs && graph.num_inputs > 0)
    throw ValidationError("build_cluster: input state width mismatch");
  QState state = graph.num_inputs > 0 ? inputs : QState::plus_state(1);
  if (graph.num_inputs == 0) {
    state = QState::plus_state(graph.num_nodes);
  } else if (graph.num_nodes > graph.num_inputs) {
    state = tensor(inputs, QState::plus_state(graph.num_nodes - graph.num_inputs));
  }
  for (const auto& [a, b] : graph.edges) apply_gate_inplace(state, gates::CZ(), {a, b});
  return state;
}

PauliString cluster_nullifier(const ClusterGraph& graph, int node) {
  graph.validate();
  if (node < 0 || node >= graph.num_nodes) throw ValidationError("nullifier node out of range");
  PauliString k = PauliString::single(graph.num_nodes, node, 'X');
  for (const auto& [a, b] : graph.edges) {
    if (a == node) k = k * PauliString::single(graph.num_nodes, b, 'Z');
    if (b == node) k = k * PauliString::single(graph.num_nodes, a, 'Z');
  }
  return k;
}

std::pair<int, QState> measure_rotated(const QState& state, int q, double phi, Rng& rng,
                                       std::optional<int> forced) {
  // Basis |phi+-> = (|0> +- e^{i phi} |1>)/sqrt2 of cos(phi) X + sin(phi) Y.
  const double r = 1.0 / std::sqrt(2.0);
  const cdouble e = std::exp(cdouble{0, phi});
  const cdouble b0[2] = {r, r * e};
  const cdouble b1[2] = {r, -r * e};
  if (forced) {
    auto [prob, post] = measure_qubit_in_basis_forced(state, q, b0, b1, *forced);
    if (prob < 1e-12) throw ValidationError("measure_rotated: forced branch has zero probability");
    return {*forced, std::move(post)};
  }
  return measure_qubit_in_basis(state, q, b0, b1, rng);
}

namespace {

// Collapse qubit q onto the rotated-basis vector for outcome m, then drop it.
QState measure_rotated_and_remove(const QState& state, int q, double phi, Rng& rng,
                                  std::optional<int> forced, int* outcome) {
  auto [m, post] = measure_rotated(state, q, phi, rng, forced);
  *outcome = m;
  const double r = 1.0 / std::sqrt(2.0);
  const cdouble e = std::exp(cdouble{0, phi});
  const cdouble basis[2] = {r, (m == 0 ? e : -e) * r};
  return remove_qubit(post, q, basis);
}

}  // namespace

std::pair<QState, int> teleport_step(const QState& psi, double phi, Rng& rng,
                                     std::optional<int> forced) {
  if (psi.num_qubits() != 1) throw ValidationError("teleport_step expects a single qubit");
  ClusterGraph g{2, {{0, 1}}, 1};
  QState cluster = build_cluster(g, psi);
  int m = 0;
  QState out = measure_rotated_and_remove(cluster, 0, phi, rng, forced, &m);
  return {std::move(out), m};
}

MbqcSingleQubitResult mbqc_single_qubit(const QState& psi, double alpha, double beta,
                                        double gamma, Rng& rng,
                                        std::optional<std::array<int, 3>> forced) {
  if (psi.num_qubits() != 1) throw ValidationError("mbqc_single_qubit expects a single qubit");
  // Linear chain 0-1-2-3 with the input on node 0; all CZs commute with the
  // later measurements, so the full cluster is built up front.
  ClusterGraph g{4, {{0, 1}, {1, 2}, {2, 3}}, 1};
  QState state = build_cluster(g, psi);

  // A step measured at basis angle -phi applies X^m H R_z(phi) to the logical
  // state, so each adaptive angle is dialed negated.
  MbqcSingleQubitResult result{QState(1), {}};
  int m1 = 0, m2 = 0, m3 = 0;
  state = measure_rotated_and_remove(state, 0, -alpha, rng,
                                     forced ? std::optional<int>((*forced)[0]) : std::nullopt,
                                     &m1);
  const double phi2 = (m1 ? -1.0 : 1.0) * beta;
  state = measure_rotated_and_remove(state, 0, -phi2, rng,
                                     forced ? std::optional<int>((*forced)[1]) : std::nullopt,
                                     &m2);
  const double phi3 = (m2 ? -1.0 : 1.0) * gamma;
  state = measure_rotated_and_remove(state, 0, -phi3, rng,
                                     forced ? std::optional<int>((*forced)[2]) : std::nullopt,
                                     &m3);

  result.output = std::move(state);
  result.record.outcomes = {m1, m2, m3};
  result.record.x_exponents = {m1 ^ m3};  // X^{m3} Z^{m2} X^{m1} ~ X^{m1^m3} Z^{m2}
  result.record.z_exponents = {m2};
  return result;
}

MbqcCnotResult mbqc_cnot(const QState& input, Rng& rng,
                         std::optional<std::array<int, 2>> forced) {
  if (input.num_qubits() != 2) throw ValidationError("mbqc_cnot expects a two-qubit input");
  // Nodes: 0 = control (qubit 1), 1 = target in (qubit 2), 2 = qubit 3,
  // 3 = output target (qubit 4). Edges CZ_34, CZ_13, CZ_23.
  ClusterGraph g{4, {{2, 3}, {0, 2}, {1, 2}}, 2};
  QState state = build_cluster(g, input);

  int m2 = 0, m3 = 0;
  // X-basis measurements are rotated measurements at phi = 0.
  state = measure_rotated_and_remove(state, 1, 0.0, rng,
                                     forced ? std::optional<int>((*forced)[0]) : std::nullopt,
                                     &m2);
  // After removing node 1, node 2 sits at index 1.
  state = measure_rotated_and_remove(state, 1, 0.0, rng,
                                     forced ? std::optional<int>((*forced)[1]) : std::nullopt,
                                     &m3);

  MbqcCnotResult result{std::move(state), {}};
  result.record.outcomes = {m2, m3};
  // X_4^{m3} (Z_1 Z_4)^{m2} on logical (control, target).
  result.record.x_exponents = {0, m3};
  result.record.z_exponents = {m2, m2};
  return result;
}

QState apply_corrections(const QState& state, const ByproductRecord& record) {
  if (record.x_exponents.size() != record.z_exponents.size() ||
      static_cast<int>(record.x_exponents.size()) != state.num_qubits())
    throw ValidationError("apply_corrections: record size mismatch");
  QState out = state;
  for (int q = 0; q < state.num_qubits(); ++q) {
    if (record.x_exponents[q]) apply_gate_inplace(out, gates::X(), {q});
    if (record.z_exponents[q]) apply_gate_inplace(out, gates::Z(), {q});
  }
  return out;
}

}  // namespace qtk
