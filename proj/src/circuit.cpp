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

#include "qtk/circuit.hpp"

#include <cmath>
#include <unordered_map>

#include "qtk/errors.hpp"

namespace qtk {

void Circuit::append(std::string gate, std::vector<int> targets, std::vector<double> params) {
  ops.push_back({std::move(gate), std::move(targets), std::move(params)});
}

std::optional<GateSignature> gate_signature(const std::string& name) {
  static const std::unordered_map<std::string, GateSignature> table = {
      {"I", {1, 0}},        {"X", {1, 0}},       {"Y", {1, 0}},     {"Z", {1, 0}},
      {"H", {1, 0}},        {"S", {1, 0}},       {"SDG", {1, 0}},   {"T", {1, 0}},
      {"RX", {1, 1}},       {"RY", {1, 1}},      {"RZ", {1, 1}},    {"RK", {1, 1}},
      {"CRK", {2, 1}},      {"CNOT", {2, 0}},    {"CX", {2, 0}},    {"CZ", {2, 0}},
      {"SWAP", {2, 0}},     {"TOFFOLI", {3, 0}}, {"CCX", {3, 0}},   {"FREDKIN", {3, 0}},
      {"CSWAP", {3, 0}},
  };
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

GateSpec resolve_gate(const std::string& name, const std::vector<double>& params) {
  const auto sig = gate_signature(name);
  if (!sig) throw ValidationError("unknown gate: " + name);
  if (static_cast<int>(params.size()) != sig->num_params)
    throw ValidationError("gate " + name + " expects " + std::to_string(sig->num_params) +
                          " parameter(s)");
  auto as_int = [&](double v) {
    const int k = static_cast<int>(std::llround(v));
    if (std::abs(v - k) > 1e-9) throw ValidationError("gate " + name + " expects an integer k");
    return k;
  };
  if (name == "I") return gates::I();
  if (name == "X") return gates::X();
  if (name == "Y") return gates::Y();
  if (name == "Z") return gates::Z();
  if (name == "H") return gates::H();
  if (name == "S") return gates::S();
  if (name == "SDG") return gates::Sdg();
  if (name == "T") return gates::T();
  if (name == "RX") return gates::RX(params[0]);
  if (name == "RY") return gates::RY(params[0]);
  if (name == "RZ") return gates::RZ(params[0]);
  if (name == "RK") return gates::RK(as_int(params[0]));
  if (name == "CRK") return controlled(gates::RK(as_int(params[0])));
  if (name == "CNOT" || name == "CX") return gates::CNOT();
  if (name == "CZ") return gates::CZ();
  if (name == "SWAP") return gates::SWAP();
  if (name == "TOFFOLI" || name == "CCX") return gates::TOFFOLI();
  if (name == "FREDKIN" || name == "CSWAP") return gates::FREDKIN();
  throw ValidationError("unknown gate: " + name);
}

void Circuit::validate() const {
  if (num_qubits < 1) throw ValidationError("circuit has no qubits");
  for (const auto& op : ops) {
    const auto sig = gate_signature(op.gate);
    if (!sig) throw ValidationError("unknown gate: " + op.gate);
    if (static_cast<int>(op.targets.size()) != sig->arity)
      throw ValidationError("gate " + op.gate + " expects " + std::to_string(sig->arity) +
                            " target(s)");
    if (static_cast<int>(op.params.size()) != sig->num_params)
      throw ValidationError("gate " + op.gate + " expects " + std::to_string(sig->num_params) +
                            " parameter(s)");
    for (std::size_t i = 0; i < op.targets.size(); ++i) {
      if (op.targets[i] < 0 || op.targets[i] >= num_qubits)
        throw ValidationError("gate " + op.gate + ": target out of range");
      for (std::size_t j = i + 1; j < op.targets.size(); ++j)
        if (op.targets[i] == op.targets[j])
          throw ValidationError("gate " + op.gate + ": duplicate targets");
    }
  }
}

void apply_circuit_inplace(QState& state, const Circuit& circuit) {
  if (circuit.num_qubits > state.num_qubits())
    throw ValidationError("circuit is wider than the state");
  for (const auto& op : circuit.ops)
    apply_gate_inplace(state, resolve_gate(op.gate, op.params), op.targets);
}

QState simulate(const Circuit& circuit) {
  circuit.validate();
  QState state(circuit.num_qubits);
  apply_circuit_inplace(state, circuit);
  return state;
}

QState simulate(const Circuit& circuit, const QState& initial) {
  circuit.validate();
  QState state = initial;
  apply_circuit_inplace(state, circuit);
  return state;
}

}  // namespace qtk
