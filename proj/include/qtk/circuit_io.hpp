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

#include <string>
#include <vector>

#include "qtk/circuit.hpp"
#include "qtk/ising.hpp"
#include "qtk/pauli.hpp"

namespace qtk {

/// Parses the line-oriented circuit format: one `GATE target [target...]
/// [param]` per line, `#` comments and blank lines ignored. Errors carry line
/// numbers. The register width is the highest target index + 1 unless
/// `min_qubits` asks for more.
Circuit parse_circuit(const std::string& text, int min_qubits = 0);

/// One op per line; parse(serialize(c)) == c.
std::string serialize_circuit(const Circuit& circuit);

/// Graph files: one `u v w` edge per line (w optional, default 1),
/// `#` comments. Vertex count is the highest index + 1.
std::pair<int, std::vector<WeightedEdge>> parse_edge_list(const std::string& text);

/// Integer-set files for subset sum / partitioning: whitespace-separated
/// integers, `#` comments.
std::vector<long long> parse_integer_set(const std::string& text);

/// Hamiltonian files: one `coefficient PAULISTRING` per line, e.g.
/// `0.5 XXI`; `#` comments.
std::vector<std::pair<double, PauliString>> parse_hamiltonian(const std::string& text);

}  // namespace qtk
