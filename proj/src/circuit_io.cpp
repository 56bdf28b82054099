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

#include "qtk/circuit_io.hpp"

#include <algorithm>
#include <sstream>

#include "qtk/errors.hpp"

namespace qtk {

namespace {

// Strips comments and splits a line into tokens.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string stripped = line;
  const auto hash = stripped.find('#');
  if (hash != std::string::npos) stripped.resize(hash);
  std::istringstream in(stripped);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Circuit parse_circuit(const std::string& text, int min_qubits) {
  Circuit circuit{std::max(min_qubits, 1), {}};
  std::istringstream in(text);
  std::string line;
  int max_target = -1;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::string name = tokens[0];
    std::transform(name.begin(), name.end(), name.begin(), ::toupper);
    const auto sig = gate_signature(name);
    if (!sig) fail(line_no, "unknown gate '" + tokens[0] + "'");
    const int expected = sig->arity + sig->num_params;
    if (static_cast<int>(tokens.size()) - 1 != expected)
      fail(line_no, "gate " + name + " expects " + std::to_string(sig->arity) + " target(s) and " +
                        std::to_string(sig->num_params) + " parameter(s)");
    CircuitOp op;
    op.gate = name;
    for (int i = 0; i < sig->arity; ++i) {
      const std::string& t = tokens[1 + i];
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(t, &used);
      } catch (const std::exception&) {
        fail(line_no, "bad target '" + t + "'");
      }
      if (used != t.size() || value < 0) fail(line_no, "bad target '" + t + "'");
      op.targets.push_back(value);
      max_target = std::max(max_target, value);
    }
    for (int i = 0; i < sig->num_params; ++i) {
      const std::string& t = tokens[1 + sig->arity + i];
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(t, &used);
      } catch (const std::exception&) {
        fail(line_no, "bad parameter '" + t + "'");
      }
      if (used != t.size()) fail(line_no, "bad parameter '" + t + "'");
      op.params.push_back(value);
    }
    for (std::size_t i = 0; i < op.targets.size(); ++i)
      for (std::size_t j = i + 1; j < op.targets.size(); ++j)
        if (op.targets[i] == op.targets[j]) fail(line_no, "duplicate targets");
    circuit.ops.push_back(std::move(op));
  }
  circuit.num_qubits = std::max(circuit.num_qubits, max_target + 1);
  circuit.validate();
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  for (const auto& op : circuit.ops) {
    out << op.gate;
    for (const int t : op.targets) out << ' ' << t;
    for (const double p : op.params) {
      out << ' ';
      // Shortest representation that round-trips.
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", p);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::pair<int, std::vector<WeightedEdge>> parse_edge_list(const std::string& text) {
  std::vector<WeightedEdge> edges;
  std::istringstream in(text);
  std::string line;
  int max_vertex = -1;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      fail(line_no, "expected 'u v [weight]'");
    WeightedEdge e;
    try {
      e.u = std::stoi(tokens[0]);
      e.v = std::stoi(tokens[1]);
      e.weight = tokens.size() == 3 ? std::stod(tokens[2]) : 1.0;
    } catch (const std::exception&) {
      fail(line_no, "bad edge entry");
    }
    if (e.u < 0 || e.v < 0 || e.u == e.v) fail(line_no, "bad edge endpoints");
    max_vertex = std::max({max_vertex, e.u, e.v});
    edges.push_back(e);
  }
  if (edges.empty()) throw ValidationError("edge list is empty");
  return {max_vertex + 1, std::move(edges)};
}

std::vector<long long> parse_integer_set(const std::string& text) {
  std::vector<long long> values;
  std::istringstream in(text);
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    for (const auto& tok : tokenize(line)) {
      try {
        values.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        fail(line_no, "bad integer '" + tok + "'");
      }
    }
  }
  if (values.empty()) throw ValidationError("integer set is empty");
  return values;
}

std::vector<std::pair<double, PauliString>> parse_hamiltonian(const std::string& text) {
  std::vector<std::pair<double, PauliString>> terms;
  std::istringstream in(text);
  std::string line;
  std::size_t width = 0;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail(line_no, "expected 'coefficient PAULISTRING'");
    double coeff = 0.0;
    try {
      coeff = std::stod(tokens[0]);
    } catch (const std::exception&) {
      fail(line_no, "bad coefficient '" + tokens[0] + "'");
    }
    PauliString p;
    try {
      p = PauliString::from_label(tokens[1]);
    } catch (const ValidationError&) {
      fail(line_no, "bad Pauli string '" + tokens[1] + "'");
    }
    if (width == 0) width = p.num_qubits();
    if (static_cast<std::size_t>(p.num_qubits()) != width)
      fail(line_no, "inconsistent Pauli string widths");
    terms.emplace_back(coeff, std::move(p));
  }
  if (terms.empty()) throw ValidationError("hamiltonian file is empty");
  return terms;
}

}  // namespace qtk
