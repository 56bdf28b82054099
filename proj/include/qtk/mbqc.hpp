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

#include <optional>
#include <utility>
#include <vector>

#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// A cluster layout: nodes are qubits, edges receive CZ gates, and the first
/// `num_inputs` nodes carry caller-provided states; the rest start in |+>.
struct ClusterGraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  int num_inputs = 0;

  void validate() const;
};

/// Tensors the input state with |+> nodes and applies CZ on every edge (the
/// CZs commute, so edge order is irrelevant). The input state must cover
/// exactly the first `num_inputs` nodes.
QState build_cluster(const ClusterGraph& graph, const QState& inputs);

/// Cluster-state nullifier K_i = X_i prod_{k in N(i)} Z_k.
PauliString cluster_nullifier(const ClusterGraph& graph, int node);

/// Projective measurement of the rotated observable
/// sigma_phi = cos(phi) X + sin(phi) Y; m = 0 means outcome +1 (state |phi+>).
/// A forced branch can be requested for exhaustive branch tests.
std::pair<int, QState> measure_rotated(const QState& state, int q, double phi, Rng& rng,
                                       std::optional<int> forced = std::nullopt);

/// One teleportation step: entangle psi with |+>, measure sigma_phi on the
/// input qubit. The remaining qubit equals X^m H R_z(-phi)|psi> up to global
/// phase (projecting onto <phi+| rewrites the pair as H diag(1, e^{-i phi})).
std::pair<QState, int> teleport_step(const QState& psi, double phi, Rng& rng,
                                     std::optional<int> forced = std::nullopt);

/// Measurement outcomes and the net byproduct exponents of a gadget run.
struct ByproductRecord {
  std::vector<int> outcomes;
  /// Per-output-qubit X and Z exponents (bits).
  std::vector<int> x_exponents;
  std::vector<int> z_exponents;
};

struct MbqcSingleQubitResult {
  QState output;  // single qubit
  ByproductRecord record;
};

/// Four-qubit chain implementing H Rz(gamma) Rx(beta) Rz(alpha) with adaptive
/// step angles phi1 = alpha, phi2 = (-1)^{m1} beta, phi3 = (-1)^{m2} gamma,
/// where a step with angle phi measures sigma_{-phi} and applies
/// X^m H R_z(phi). The output equals
/// X^{m3} Z^{m2} X^{m1} H Rz(gamma) Rx(beta) Rz(alpha)|psi> up to global
/// phase; byproducts are recorded, never applied.
MbqcSingleQubitResult mbqc_single_qubit(const QState& psi, double alpha, double beta,
                                        double gamma, Rng& rng,
                                        std::optional<std::array<int, 3>> forced = std::nullopt);

struct MbqcCnotResult {
  QState output;  // two qubits: (control, target)
  ByproductRecord record;
};

/// Measurement-based CNOT gadget: cluster |psi>_{12}|+>_3|+>_4 with CZ_34, CZ_13,
/// CZ_23; X-basis measurements on qubits 2 and 3. The output on (1, 4) is
/// X_4^{m3} (Z_1 Z_4)^{m2} CNOT_{1->4} |psi_in> up to global phase.
MbqcCnotResult mbqc_cnot(const QState& input, Rng& rng,
                         std::optional<std::array<int, 2>> forced = std::nullopt);

/// Applies the recorded byproduct corrections (X then Z per qubit), undoing
/// the gadget's Pauli frame up to global phase.
QState apply_corrections(const QState& state, const ByproductRecord& record);

}  // namespace qtk
