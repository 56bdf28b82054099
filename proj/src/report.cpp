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

#include "qtk/report.hpp"

#include <chrono>
#include <sstream>

#include "qtk/algorithms.hpp"
#include "qtk/anneal.hpp"
#include "qtk/circuit_io.hpp"
#include "qtk/errors.hpp"
#include "qtk/ising.hpp"
#include "qtk/mbqc.hpp"
#include "qtk/qaoa.hpp"
#include "qtk/qec.hpp"
#include "qtk/sampling.hpp"
#include "qtk/shor.hpp"
#include "qtk/vqe.hpp"

namespace qtk {

namespace {

using nlohmann::json;

json counts_to_json(const std::map<std::string, std::uint64_t>& counts) {
  json j = json::object();
  for (const auto& [key, value] : counts) j[key] = value;
  return j;
}

IsingProblem problem_from_config(const RunConfig& cfg) {
  if (cfg.problem_type == "maxcut") {
    auto [vertices, edges] = parse_edge_list(cfg.problem_text);
    return encode_maxcut(vertices, edges);
  }
  if (cfg.problem_type == "subsetsum")
    return encode_subset_sum(parse_integer_set(cfg.problem_text), cfg.subset_target);
  if (cfg.problem_type == "partition")
    return encode_number_partition(parse_integer_set(cfg.problem_text));
  throw ValidationError("unknown problem type: " + cfg.problem_type);
}

json problem_summary(const IsingProblem& p) {
  const GroundResult ground = brute_force_ground(p);
  json j;
  j["num_spins"] = p.num_spins();
  j["sense"] = p.sense() == OptimizationSense::kMaximize ? "maximize" : "minimize";
  j["optimal_energy"] = ground.optimal_energy;
  json opt = json::array();
  for (const auto z : ground.optimizers) opt.push_back(bits_to_string(z, p.num_spins()));
  j["optimizers"] = opt;
  return j;
}

json cmd_run(const RunConfig& cfg, Rng& rng) {
  const Circuit circuit = parse_circuit(cfg.circuit_text, cfg.qubits);
  const QState state = simulate(circuit);
  json results;
  results["num_qubits"] = circuit.num_qubits;
  results["num_ops"] = circuit.ops.size();
  results["counts"] = counts_to_json(sample_counts(state, cfg.shots, rng));
  // Full amplitudes for small registers only.
  if (circuit.num_qubits <= 8) {
    json amps = json::array();
    for (std::uint64_t z = 0; z < state.dim(); ++z) {
      amps.push_back(json::array({state.amplitude(z).real(), state.amplitude(z).imag()}));
    }
    results["amplitudes"] = amps;
  }
  return results;
}

json cmd_grover(const RunConfig& cfg, Rng& rng) {
  if (cfg.qubits < 1 || cfg.qubits > 20) throw ValidationError("grover: bad qubit count");
  std::uint64_t marked = 0;
  if (cfg.marked_bits.size() != static_cast<std::size_t>(cfg.qubits))
    throw ValidationError("grover: marked bitstring length must equal the qubit count");
  for (const char c : cfg.marked_bits) {
    if (c != '0' && c != '1') throw ValidationError("grover: marked string must be binary");
    marked = marked * 2 + (c - '0');
  }
  const auto oracle = BooleanOracle::marked_item(cfg.qubits, marked);
  const std::uint64_t n_items = std::uint64_t{1} << cfg.qubits;
  const int k = cfg.iterations >= 0 ? cfg.iterations : grover_iterations(n_items, 1);
  const GroverResult res = grover_search(cfg.qubits, oracle, k, rng);
  json results;
  results["iterations"] = k;
  results["optimal_iterations"] = grover_iterations(n_items, 1);
  results["success_probability"] = res.success_probability;
  results["closed_form_probability"] = grover_success_closed_form(n_items, 1, k);
  results["sampled_bitstring"] = res.sampled_bitstring;
  return results;
}

json cmd_shor(const RunConfig& cfg, Rng& rng) {
  const FactorResult res = factor(cfg.number, rng, cfg.attempts);
  json results;
  results["n"] = res.n;
  results["factors"] = json::array({res.factor_a, res.factor_b});
  results["attempts"] = res.attempts;
  json transcript = json::array();
  for (const auto& a : res.transcript) {
    json entry;
    entry["x"] = a.x;
    entry["branch"] = a.branch;
    if (a.r) entry["r"] = *a.r;
    if (a.factor_found) entry["factor"] = *a.factor_found;
    transcript.push_back(entry);
  }
  results["transcript"] = transcript;
  return results;
}

json cmd_qec(const RunConfig& cfg, Rng& rng) {
  StabilizerCode code = [&] {
    if (cfg.code_name == "bitflip") return StabilizerCode::bit_flip();
    if (cfg.code_name == "phaseflip") return StabilizerCode::phase_flip();
    if (cfg.code_name == "shor9") return StabilizerCode::shor_nine();
    throw ValidationError("unknown code: " + cfg.code_name);
  }();
  PauliErrorModel model;
  model.p = cfg.error_probability;
  if (cfg.error_kind == "bitflip") model.kind = ErrorKind::kBitFlip;
  else if (cfg.error_kind == "phaseflip") model.kind = ErrorKind::kPhaseFlip;
  else if (cfg.error_kind == "depolarizing") model.kind = ErrorKind::kDepolarizing;
  else throw ValidationError("unknown error kind: " + cfg.error_kind);

  const LogicalErrorRate rate = logical_error_rate(code, model, cfg.trials, rng);
  json results;
  results["code"] = code.name();
  results["n"] = code.n();
  results["distance"] = code.d();
  results["p"] = model.p;
  results["trials"] = rate.trials;
  results["failures"] = rate.failures;
  results["logical_error_rate"] = rate.rate;
  results["stderr"] = rate.stderr_;
  if (cfg.code_name == "bitflip" && cfg.error_kind == "bitflip")
    results["exact_rate"] = bitflip_code_exact_failure(model.p);
  return results;
}

json cmd_qaoa(const RunConfig& cfg, Rng& rng) {
  const IsingProblem p = problem_from_config(cfg);
  QaoaOptimizeOptions opts;
  opts.restarts = cfg.restarts;
  opts.shots = cfg.shots;
  const QaoaResult res = qaoa_optimize(p, cfg.depth, opts, rng);
  json results;
  results["problem"] = problem_summary(p);
  results["depth"] = cfg.depth;
  results["expectation"] = res.expectation;
  results["gammas"] = res.params.gammas;
  results["betas"] = res.params.betas;
  results["best_bitstring"] = res.best_bitstring;
  results["best_cost"] = res.best_cost;
  results["approximation_ratio"] = res.approximation_ratio;
  results["success_probability"] = res.success_probability;
  results["converged"] = res.converged;
  return results;
}

json cmd_anneal(const RunConfig& cfg, Rng& rng) {
  const IsingProblem p = problem_from_config(cfg);
  AnnealSchedule sched;
  sched.tau = cfg.tau;
  sched.steps = cfg.steps;
  const AnnealResult res = anneal_evolve(p, sched);
  json results;
  results["problem"] = problem_summary(p);
  results["tau"] = cfg.tau;
  results["steps"] = cfg.steps;
  results["success_probability"] = res.success_probability;
  results["t99"] = res.success_probability > 0.0 && res.success_probability < 1.0
                       ? time_to_solution(res.success_probability, cfg.tau)
                       : cfg.tau;
  results["counts"] = counts_to_json(sample_counts(res.state, cfg.shots, rng));
  return results;
}

json cmd_vqe(const RunConfig& cfg, Rng& rng) {
  VqeProblem prob;
  prob.terms = parse_hamiltonian(cfg.hamiltonian_text);
  prob.num_qubits = prob.terms.front().second.num_qubits();
  prob.depth = cfg.depth;
  VqeOptions opts;
  opts.restarts = cfg.restarts;
  opts.shots = 0;
  const VqeResult res = vqe_optimize(prob, opts, rng);
  json results;
  results["num_qubits"] = prob.num_qubits;
  results["depth"] = prob.depth;
  results["parameter_count"] = prob.parameter_count();
  results["energy"] = res.energy;
  results["params"] = res.params;
  results["converged"] = res.converged;
  return results;
}

json cmd_mbqc_demo(const RunConfig& cfg, Rng& rng) {
  // Chain demo on a random-ish fixed input, plus the CNOT gadget on |10>.
  const QState psi = QState::one_qubit(0.6, cdouble{0.0, 0.8});
  const auto chain = mbqc_single_qubit(psi, cfg.alpha, cfg.beta, cfg.gamma, rng);
  QState target = psi;
  target = apply_gate(target, gates::RZ(cfg.alpha), {0});
  target = apply_gate(target, gates::RX(cfg.beta), {0});
  target = apply_gate(target, gates::RZ(cfg.gamma), {0});
  target = apply_gate(target, gates::H(), {0});

  json results;
  results["chain_outcomes"] = chain.record.outcomes;
  results["chain_x_exponent"] = chain.record.x_exponents[0];
  results["chain_z_exponent"] = chain.record.z_exponents[0];
  results["chain_corrected_fidelity"] =
      fidelity(apply_corrections(chain.output, chain.record), target);

  const QState input = QState::basis_state(2, 2);  // |10>
  const auto gadget = mbqc_cnot(input, rng);
  QState cnot_target = input;
  apply_gate_inplace(cnot_target, gates::CNOT(), {0, 1});
  results["cnot_outcomes"] = gadget.record.outcomes;
  results["cnot_corrected_fidelity"] =
      fidelity(apply_corrections(gadget.output, gadget.record), cnot_target);
  return results;
}

json cmd_sample_iqp(const RunConfig& cfg, Rng& rng) {
  const IqpCircuit circuit = iqp_random(cfg.qubits > 0 ? cfg.qubits : 3, cfg.gateset,
                                        cfg.iqp_depth, rng);
  const IqpSampleResult res = iqp_sample(circuit, cfg.shots, rng);
  json results;
  results["num_qubits"] = circuit.num_qubits;
  results["gateset"] = circuit.gateset;
  results["depth"] = circuit.ops.size();
  results["distribution"] = res.distribution;
  std::map<std::string, std::uint64_t> counts;
  for (const auto& s : res.samples) ++counts[s];
  results["counts"] = counts_to_json(counts);
  return results;
}

json cmd_sample_boson(const RunConfig& cfg, Rng& rng) {
  const Interferometer intf = random_interferometer(cfg.modes, rng);
  const BosonDistribution dist = boson_distribution(intf, cfg.photons, cfg.modes);
  json results;
  results["modes"] = cfg.modes;
  results["photons"] = cfg.photons;
  json configs = json::array();
  double total = 0.0;
  for (std::size_t i = 0; i < dist.configs.size(); ++i) {
    json entry;
    entry["occupations"] = dist.configs[i].occupations;
    entry["probability"] = dist.probabilities[i];
    total += dist.probabilities[i];
    configs.push_back(entry);
  }
  results["distribution"] = configs;
  results["total_probability"] = total;
  return results;
}

json cmd_gap_scan(const RunConfig& cfg) {
  const auto h0 = parse_hamiltonian(cfg.h0_text);
  const auto h1 = parse_hamiltonian(cfg.h1_text);
  const GapScanResult res = gap_scan(h0, h1, cfg.resolution);
  json results;
  results["resolution"] = cfg.resolution;
  results["min_gap"] = res.min_gap;
  results["s_at_min"] = res.s_at_min;
  json curve = json::array();
  for (std::size_t i = 0; i < res.s_values.size(); ++i)
    curve.push_back(json::array({res.s_values[i], res.gaps[i]}));
  results["curve"] = curve;
  return results;
}

}  // namespace

nlohmann::json run_experiment(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);

  json report;
  report["command"] = cfg.subcommand.empty() ? cfg.command : cfg.command + " " + cfg.subcommand;
  report["seed"] = cfg.seed;

  json inputs;
  inputs["shots"] = cfg.shots;
  json results;
  if (cfg.command == "run") {
    inputs["circuit"] = cfg.circuit_text;
    results = cmd_run(cfg, rng);
  } else if (cfg.command == "grover") {
    inputs["qubits"] = cfg.qubits;
    inputs["marked"] = cfg.marked_bits;
    results = cmd_grover(cfg, rng);
  } else if (cfg.command == "shor") {
    inputs["n"] = cfg.number;
    inputs["max_attempts"] = cfg.attempts;
    results = cmd_shor(cfg, rng);
  } else if (cfg.command == "qec") {
    inputs["code"] = cfg.code_name;
    inputs["error_kind"] = cfg.error_kind;
    inputs["p"] = cfg.error_probability;
    inputs["trials"] = cfg.trials;
    results = cmd_qec(cfg, rng);
  } else if (cfg.command == "qaoa") {
    inputs["problem_type"] = cfg.problem_type;
    inputs["problem"] = cfg.problem_text;
    inputs["depth"] = cfg.depth;
    results = cmd_qaoa(cfg, rng);
  } else if (cfg.command == "anneal") {
    inputs["problem_type"] = cfg.problem_type;
    inputs["problem"] = cfg.problem_text;
    inputs["tau"] = cfg.tau;
    inputs["steps"] = cfg.steps;
    results = cmd_anneal(cfg, rng);
  } else if (cfg.command == "vqe") {
    inputs["hamiltonian"] = cfg.hamiltonian_text;
    inputs["depth"] = cfg.depth;
    results = cmd_vqe(cfg, rng);
  } else if (cfg.command == "mbqc-demo") {
    inputs["alpha"] = cfg.alpha;
    inputs["beta"] = cfg.beta;
    inputs["gamma"] = cfg.gamma;
    results = cmd_mbqc_demo(cfg, rng);
  } else if (cfg.command == "sample" && cfg.subcommand == "iqp") {
    inputs["qubits"] = cfg.qubits > 0 ? cfg.qubits : 3;
    inputs["gateset"] = cfg.gateset;
    inputs["depth"] = cfg.iqp_depth;
    results = cmd_sample_iqp(cfg, rng);
  } else if (cfg.command == "sample" && cfg.subcommand == "boson") {
    inputs["modes"] = cfg.modes;
    inputs["photons"] = cfg.photons;
    results = cmd_sample_boson(cfg, rng);
  } else if (cfg.command == "gap-scan") {
    inputs["h0"] = cfg.h0_text;
    inputs["h1"] = cfg.h1_text;
    inputs["resolution"] = cfg.resolution;
    results = cmd_gap_scan(cfg);
  } else {
    throw ValidationError("unknown command: " + cfg.command);
  }

  report["inputs"] = inputs;
  report["results"] = results;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
  return report;
}

std::string render_report(const nlohmann::json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";

  const auto& results = report.at("results");
  if (format == "csv") {
    std::ostringstream out;
    if (results.contains("curve")) {
      out << "s,gap\n";
      for (const auto& row : results.at("curve"))
        out << row[0].get<double>() << ',' << row[1].get<double>() << '\n';
      return out.str();
    }
    if (results.contains("counts")) {
      out << "bitstring,count\n";
      for (const auto& [key, value] : results.at("counts").items())
        out << key << ',' << value.get<std::uint64_t>() << '\n';
      return out.str();
    }
    if (results.contains("distribution") && results.at("distribution").is_array() &&
        !results.at("distribution").empty() && results.at("distribution")[0].is_object()) {
      out << "occupations,probability\n";
      for (const auto& entry : results.at("distribution")) {
        std::string occ;
        for (const auto& o : entry.at("occupations")) {
          if (!occ.empty()) occ += ' ';
          occ += std::to_string(o.get<int>());
        }
        out << '"' << occ << "\"," << entry.at("probability").get<double>() << '\n';
      }
      return out.str();
    }
    throw ValidationError("csv format covers histograms and gap curves only");
  }

  if (format == "text") {
    std::ostringstream out;
    const std::string command = report.at("command").get<std::string>();
    out << "command: " << command << "  (seed " << report.at("seed").get<std::uint64_t>()
        << ")\n";
    if (command == "shor") {
      // Didactic modular-exponentiation table for the base that actually
      // went through order finding.
      const auto n = results.at("n").get<std::uint64_t>();
      std::uint64_t base = 0;
      for (const auto& entry : results.at("transcript"))
        if (entry.contains("r")) base = entry.at("x").get<std::uint64_t>();
      if (base >= 2) {
        out << "j\t" << base << "^j mod " << n << "\n";
        std::uint64_t acc = 1;
        for (int j = 0; j <= 8; ++j) {
          out << j << '\t' << acc << '\n';
          acc = acc * base % n;
        }
      }
      out << "factors: " << results.at("factors")[0].get<std::uint64_t>() << " x "
          << results.at("factors")[1].get<std::uint64_t>() << '\n';
      return out.str();
    }
    for (const auto& [key, value] : results.items()) {
      if (value.is_structured()) continue;
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return out.str();
  }

  throw ValidationError("unknown format: " + format);
}

int exit_code_for_exception(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return 2;
  if (dynamic_cast<const CapExceeded*>(&e)) return 3;
  if (dynamic_cast<const AlgorithmFailure*>(&e)) return 4;
  return 1;
}

nlohmann::json error_object(const std::exception& e) {
  nlohmann::json j;
  j["error"] = e.what();
  j["exit_code"] = exit_code_for_exception(e);
  return j;
}

}  // namespace qtk
