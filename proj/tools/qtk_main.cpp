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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qtk/errors.hpp"
#include "qtk/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qtk::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Desk-scale quantum computing toolkit: simulators, algorithms, samplers"};
  app.require_subcommand(1);

  qtk::RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed (echoed in the report)")->capture_default_str();
  app.add_option("--shots", cfg.shots, "measurement shots")->capture_default_str();
  app.add_option("--format", cfg.format, "output format: json, csv, or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string circuit_file, problem_file, hamiltonian_file, h0_file, h1_file;

  auto* run = app.add_subcommand("run", "simulate a circuit file and sample it");
  run->add_option("circuit", circuit_file, "circuit file path")->required();
  run->add_option("--qubits", cfg.qubits, "minimum register width");

  auto* grover = app.add_subcommand("grover", "search for a marked bitstring");
  grover->add_option("--qubits", cfg.qubits, "register width")->required();
  grover->add_option("--marked", cfg.marked_bits, "marked bitstring, MSB first")->required();
  grover->add_option("--iterations", cfg.iterations, "Grover iterations (default optimal)");

  auto* shor = app.add_subcommand("shor", "factor a composite via order finding");
  shor->add_option("--n", cfg.number, "composite to factor (4..1024)")->required();
  shor->add_option("--max-attempts", cfg.attempts, "attempt budget")->capture_default_str();

  auto* qec = app.add_subcommand("qec", "Monte-Carlo logical error rate of a code");
  qec->add_option("--code", cfg.code_name, "bitflip, phaseflip, or shor9")
      ->check(CLI::IsMember({"bitflip", "phaseflip", "shor9"}))
      ->capture_default_str();
  qec->add_option("--p", cfg.error_probability, "per-qubit error probability")->required();
  qec->add_option("--trials", cfg.trials, "Monte-Carlo trials")->capture_default_str();
  qec->add_option("--error-kind", cfg.error_kind, "bitflip, phaseflip, or depolarizing")
      ->check(CLI::IsMember({"bitflip", "phaseflip", "depolarizing"}))
      ->capture_default_str();

  auto add_problem_flags = [&](CLI::App* cmd) {
    cmd->add_option("--problem-file", problem_file, "edge list or integer set file")->required();
    cmd->add_option("--problem-type", cfg.problem_type, "maxcut, subsetsum, or partition")
        ->check(CLI::IsMember({"maxcut", "subsetsum", "partition"}))
        ->capture_default_str();
    cmd->add_option("--target", cfg.subset_target, "subset-sum target m");
  };

  auto* qaoa = app.add_subcommand("qaoa", "variational optimization of an encoded problem");
  add_problem_flags(qaoa);
  qaoa->add_option("--p-depth", cfg.depth, "QAOA depth p")->capture_default_str();
  qaoa->add_option("--restarts", cfg.restarts, "optimizer restarts")->capture_default_str();

  auto* anneal = app.add_subcommand("anneal", "Trotterized annealing of an encoded problem");
  add_problem_flags(anneal);
  anneal->add_option("--tau", cfg.tau, "total annealing time")->capture_default_str();
  anneal->add_option("--steps", cfg.steps, "Trotter steps")->capture_default_str();

  auto* vqe = app.add_subcommand("vqe", "ground-state search over a Pauli Hamiltonian");
  vqe->add_option("--hamiltonian-file", hamiltonian_file, "terms: coefficient PAULISTRING")
      ->required();
  vqe->add_option("--depth", cfg.depth, "entangler repetitions d")->capture_default_str();
  vqe->add_option("--restarts", cfg.restarts, "optimizer restarts")->capture_default_str();

  auto* mbqc = app.add_subcommand("mbqc-demo", "measurement-based chain and CNOT gadget demo");
  mbqc->add_option("--alpha", cfg.alpha, "first Euler angle")->capture_default_str();
  mbqc->add_option("--beta", cfg.beta, "second Euler angle")->capture_default_str();
  mbqc->add_option("--gamma", cfg.gamma, "third Euler angle")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "sub-universal sampling models");
  sample->require_subcommand(1);
  auto* iqp = sample->add_subcommand("iqp", "random IQP circuit sampling");
  iqp->add_option("--qubits", cfg.qubits, "register width")->capture_default_str();
  iqp->add_option("--gateset", cfg.gateset, "1 = {sqrtCZ, T powers}, 2 = {Z, CZ, CCZ}")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  iqp->add_option("--depth", cfg.iqp_depth, "number of diagonal gates")->capture_default_str();
  auto* boson = sample->add_subcommand("boson", "boson-sampling output distribution");
  boson->add_option("--modes", cfg.modes, "interferometer modes")->capture_default_str();
  boson->add_option("--photons", cfg.photons, "input photons (<= modes)")->capture_default_str();

  auto* gap = app.add_subcommand("gap-scan", "spectral gap along (1-s) H0 + s H1");
  gap->add_option("--h0-file", h0_file, "initial Hamiltonian terms")->required();
  gap->add_option("--h1-file", h1_file, "final Hamiltonian terms")->required();
  gap->add_option("--resolution", cfg.resolution, "grid spacing in s")->capture_default_str();

  // Let the global --seed/--shots/--format flags appear after a subcommand.
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto* sub : app.get_subcommands()) {
      cfg.command = sub->get_name();
      if (cfg.command == "sample")
        cfg.subcommand = sub->get_subcommands().front()->get_name();
    }
    if (!circuit_file.empty()) cfg.circuit_text = slurp(circuit_file);
    if (!problem_file.empty()) cfg.problem_text = slurp(problem_file);
    if (!hamiltonian_file.empty()) cfg.hamiltonian_text = slurp(hamiltonian_file);
    if (!h0_file.empty()) cfg.h0_text = slurp(h0_file);
    if (!h1_file.empty()) cfg.h1_text = slurp(h1_file);

    const nlohmann::json report = qtk::run_experiment(cfg);
    std::cout << qtk::render_report(report, cfg.format);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << qtk::error_object(e).dump(2) << '\n';
    return qtk::exit_code_for_exception(e);
  }
}
