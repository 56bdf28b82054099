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

#include <cstdint>
#include <string>

#include <json.hpp>

namespace qtk {

/// Parsed invocation of one CLI subcommand. Identical configs produce
/// byte-identical reports except for the wall_time_ms field.
struct RunConfig {
  std::string command;     // run | grover | shor | qec | qaoa | anneal | vqe |
                           // mbqc-demo | sample | gap-scan
  std::string subcommand;  // iqp | boson (for sample)
  std::uint64_t seed = 1;
  std::uint64_t shots = 1024;
  std::string format = "json";  // json | csv | text

  // run
  std::string circuit_text;
  int qubits = 0;  // also: grover / iqp registers

  // grover
  std::string marked_bits;
  int iterations = -1;  // -1 = optimal

  // shor
  std::uint64_t number = 0;
  int attempts = 10;
  int counting_qubits = 0;  // 0 = default rule

  // qec
  std::string code_name = "bitflip";
  std::string error_kind = "bitflip";
  double error_probability = 0.0;
  std::uint64_t trials = 1000;

  // qaoa / anneal problems
  std::string problem_type = "maxcut";  // maxcut | subsetsum | partition
  std::string problem_text;
  long long subset_target = 0;
  int depth = 1;  // qaoa p-depth, vqe entangler depth
  int restarts = 20;

  // anneal
  double tau = 10.0;
  int steps = 100;

  // vqe
  std::string hamiltonian_text;

  // mbqc-demo
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // sample
  int gateset = 1;
  int iqp_depth = 20;
  int modes = 3;
  int photons = 2;

  // gap-scan
  std::string h0_text;
  std::string h1_text;
  double resolution = 1e-3;
};

/// Runs one experiment and returns the JSON report document
/// {command, seed, inputs, results, wall_time_ms}.
nlohmann::json run_experiment(const RunConfig& cfg);

/// Renders a report in the requested format; csv covers histograms and gap
/// curves, text prints a didactic table where one exists.
std::string render_report(const nlohmann::json& report, const std::string& format);

/// Exit codes: 0 success, 2 validation, 3 cap exceeded, 4 algorithm failure.
int exit_code_for_exception(const std::exception& e);

/// Machine-readable error object for nonzero exits.
nlohmann::json error_object(const std::exception& e);

}  // namespace qtk
