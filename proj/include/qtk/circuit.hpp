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
#include <string>
#include <vector>

#include "qtk/gates.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// One gate application: a named gate, its target qubits, real parameters.
struct CircuitOp {
  std::string gate;
  std::vector<int> targets;
  std::vector<double> params;
};

/// An ordered list of gate applications on a fixed-width register.
struct Circuit {
  int num_qubits = 0;
  std::vector<CircuitOp> ops;

  void append(std::string gate, std::vector<int> targets, std::vector<double> params = {});
  /// Checks gate names, arities, parameter counts and target ranges.
  void validate() const;
  std::size_t size() const { return ops.size(); }
};

/// Number of targets and parameters a named gate expects, or nullopt if the
/// name is unknown. Gate names are the upper-case forms used in circuit files.
struct GateSignature {
  int arity;
  int num_params;
};
std::optional<GateSignature> gate_signature(const std::string& name);

/// Instantiates a named gate with bound parameters.
GateSpec resolve_gate(const std::string& name, const std::vector<double>& params);

/// Runs the circuit on |0...0>.
QState simulate(const Circuit& circuit);

/// Runs the circuit on the given initial state (the circuit may address fewer
/// qubits than the state has).
QState simulate(const Circuit& circuit, const QState& initial);

void apply_circuit_inplace(QState& state, const Circuit& circuit);

}  // namespace qtk
