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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qtk/circuit_io.hpp"
#include "qtk/errors.hpp"
#include "qtk/report.hpp"

using namespace qtk;
using nlohmann::json;

namespace {

// Minimal validator for the subset of JSON Schema the shipped document uses:
// type, required, properties, items, const, oneOf.
bool validate_schema(const json& schema, const json& value);

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "boolean") return value.is_boolean();
  return false;
}

bool validate_schema(const json& schema, const json& value) {
  if (schema.contains("const") && value != schema.at("const")) return false;
  if (schema.contains("type") && !type_matches(schema.at("type").get<std::string>(), value))
    return false;
  if (schema.contains("required")) {
    if (!value.is_object()) return false;
    for (const auto& key : schema.at("required"))
      if (!value.contains(key.get<std::string>())) return false;
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema.at("properties").items())
      if (value.contains(key) && !validate_schema(sub, value.at(key))) return false;
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value)
      if (!validate_schema(schema.at("items"), item)) return false;
  }
  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const auto& branch : schema.at("oneOf")) matches += validate_schema(branch, value);
    if (matches != 1) return false;
  }
  return true;
}

json load_schema() {
  std::ifstream in(std::string(QTK_SOURCE_DIR) + "/docs/report_schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

std::string load_file(const std::string& rel) {
  std::ifstream in(std::string(QTK_SOURCE_DIR) + "/" + rel);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json strip_wall_time(json report) {
  report.erase("wall_time_ms");
  return report;
}

}  // namespace

TEST_CASE("circuit parse round trip is the identity") {
  const std::string text =
      "# bell pair\n"
      "H 0\n"
      "CNOT 0 1\n"
      "\n"
      "RZ 0 0.5\n"
      "CRK 1 0 3\n";
  const Circuit c = parse_circuit(text);
  CHECK(c.num_qubits == 2);
  REQUIRE(c.ops.size() == 4);
  CHECK(c.ops[2].gate == "RZ");
  CHECK(c.ops[2].params[0] == doctest::Approx(0.5));
  const std::string serialized = serialize_circuit(c);
  const Circuit reparsed = parse_circuit(serialized);
  REQUIRE(reparsed.ops.size() == c.ops.size());
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    CHECK(reparsed.ops[i].gate == c.ops[i].gate);
    CHECK(reparsed.ops[i].targets == c.ops[i].targets);
    CHECK(reparsed.ops[i].params == c.ops[i].params);
  }
  CHECK(serialize_circuit(reparsed) == serialized);
}

TEST_CASE("circuit parse errors carry line numbers") {
  try {
    parse_circuit("H 0\nFOO 0\n");
    FAIL("expected a parse error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("FOO") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_circuit("CNOT 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_circuit("RZ 0 abc\n"), ValidationError);
  CHECK_THROWS_AS(parse_circuit("CNOT 0 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_circuit("RZ 0\n"), ValidationError);
}

TEST_CASE("file format parsers") {
  const auto [vertices, edges] = parse_edge_list("0 1 2.5\n1 2\n# comment\n");
  CHECK(vertices == 3);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0].weight == doctest::Approx(2.5));
  CHECK(edges[1].weight == doctest::Approx(1.0));
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ValidationError);

  const auto nums = parse_integer_set("# set\n-5 -3\n1 4 9\n");
  CHECK(nums == std::vector<long long>{-5, -3, 1, 4, 9});

  const auto terms = parse_hamiltonian("1.0 ZZ\n0.5 XI\n");
  REQUIRE(terms.size() == 2);
  CHECK(terms[1].first == doctest::Approx(0.5));
  CHECK(terms[1].second.label() == "XI");
  CHECK_THROWS_AS(parse_hamiltonian("1.0 ZZ\n0.5 X\n"), ValidationError);
}

TEST_CASE("every subcommand's report validates against the shipped schema") {
  const json schema = load_schema();

  std::vector<RunConfig> configs;
  {
    RunConfig cfg;
    cfg.command = "run";
    cfg.circuit_text = load_file("data/bell.qc");
    cfg.shots = 50;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "grover";
    cfg.qubits = 3;
    cfg.marked_bits = "101";
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "shor";
    cfg.number = 15;
    cfg.seed = 7;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "qec";
    cfg.error_probability = 0.05;
    cfg.trials = 500;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "qaoa";
    cfg.problem_text = load_file("data/maxcut5.edges");
    cfg.depth = 1;
    cfg.restarts = 3;
    cfg.shots = 128;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "anneal";
    cfg.problem_text = load_file("data/maxcut5.edges");
    cfg.tau = 5.0;
    cfg.steps = 50;
    cfg.shots = 100;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "vqe";
    cfg.hamiltonian_text = load_file("data/vqe_demo.txt");
    cfg.depth = 1;
    cfg.restarts = 3;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "mbqc-demo";
    cfg.alpha = 0.3;
    cfg.beta = 1.1;
    cfg.gamma = 2.2;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "sample";
    cfg.subcommand = "iqp";
    cfg.qubits = 3;
    cfg.iqp_depth = 10;
    cfg.shots = 64;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "sample";
    cfg.subcommand = "boson";
    cfg.modes = 3;
    cfg.photons = 2;
    configs.push_back(cfg);
  }
  {
    RunConfig cfg;
    cfg.command = "gap-scan";
    cfg.h0_text = load_file("data/gap_h0.txt");
    cfg.h1_text = load_file("data/gap_h1.txt");
    cfg.resolution = 1e-2;
    configs.push_back(cfg);
  }

  for (const auto& cfg : configs) {
    CAPTURE(cfg.command);
    const json report = run_experiment(cfg);
    CHECK(validate_schema(schema, report));
  }
}

TEST_CASE("identical configurations produce byte-identical reports") {
  RunConfig cfg;
  cfg.command = "qaoa";
  cfg.problem_text = load_file("data/maxcut5.edges");
  cfg.depth = 1;
  cfg.restarts = 3;
  cfg.seed = 42;
  const json a = strip_wall_time(run_experiment(cfg));
  const json b = strip_wall_time(run_experiment(cfg));
  CHECK(a.dump() == b.dump());

  cfg.seed = 43;
  const json c = strip_wall_time(run_experiment(cfg));
  CHECK(a.dump() != c.dump());
}

TEST_CASE("seed is echoed in every report") {
  RunConfig cfg;
  cfg.command = "grover";
  cfg.qubits = 2;
  cfg.marked_bits = "11";
  cfg.seed = 987654321;
  const json report = run_experiment(cfg);
  CHECK(report.at("seed").get<std::uint64_t>() == 987654321);
}

TEST_CASE("shor report on 15 yields the known factors") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    RunConfig cfg;
    cfg.command = "shor";
    cfg.number = 15;
    cfg.seed = seed;
    const json report = run_experiment(cfg);
    CHECK(report.at("results").at("factors")[0].get<int>() == 3);
    CHECK(report.at("results").at("factors")[1].get<int>() == 5);
  }
}

TEST_CASE("qec report rate is near the exact value") {
  RunConfig cfg;
  cfg.command = "qec";
  cfg.error_probability = 0.05;
  cfg.trials = 20000;
  const json report = run_experiment(cfg);
  const double rate = report.at("results").at("logical_error_rate").get<double>();
  const double exact = report.at("results").at("exact_rate").get<double>();
  CHECK(exact == doctest::Approx(0.007250).epsilon(1e-9));
  CHECK(std::abs(rate - exact) < 3 * std::sqrt(exact * (1 - exact) / 20000.0));
}

TEST_CASE("boson report distribution sums to one") {
  RunConfig cfg;
  cfg.command = "sample";
  cfg.subcommand = "boson";
  cfg.modes = 3;
  cfg.photons = 2;
  cfg.seed = 1;
  const json report = run_experiment(cfg);
  CHECK(report.at("results").at("total_probability").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("render formats: csv histograms, csv gap curves, and text tables") {
  RunConfig cfg;
  cfg.command = "run";
  cfg.circuit_text = "H 0\nCNOT 0 1\n";
  cfg.shots = 100;
  const json report = run_experiment(cfg);
  const std::string csv = render_report(report, "csv");
  CHECK(csv.rfind("bitstring,count\n", 0) == 0);

  RunConfig gap;
  gap.command = "gap-scan";
  gap.h0_text = "-1.0 X\n";
  gap.h1_text = "-1.0 Z\n";
  gap.resolution = 0.25;
  const std::string gap_csv = render_report(run_experiment(gap), "csv");
  CHECK(gap_csv.rfind("s,gap\n", 0) == 0);
  // Header + 5 grid points.
  CHECK(std::count(gap_csv.begin(), gap_csv.end(), '\n') == 6);

  RunConfig shor;
  shor.command = "shor";
  shor.number = 15;
  shor.seed = 2;  // a seed whose run goes through order finding
  const std::string text = render_report(run_experiment(shor), "text");
  CHECK(text.find("mod 15") != std::string::npos);
  CHECK(text.find("factors: 3 x 5") != std::string::npos);

  CHECK_THROWS_AS(render_report(run_experiment(shor), "csv"), ValidationError);
  CHECK_THROWS_AS(render_report(report, "yaml"), ValidationError);
}

TEST_CASE("exit codes map exception classes") {
  CHECK(exit_code_for_exception(ValidationError("x")) == 2);
  CHECK(exit_code_for_exception(CapExceeded("x")) == 3);
  CHECK(exit_code_for_exception(AlgorithmFailure("x")) == 4);
  CHECK(exit_code_for_exception(std::runtime_error("x")) == 1);
  const json err = error_object(ValidationError("bad flag"));
  CHECK(err.at("error").get<std::string>() == "bad flag");
  CHECK(err.at("exit_code").get<int>() == 2);
}

TEST_CASE("unknown problem types and commands are validation errors") {
  RunConfig cfg;
  cfg.command = "qaoa";
  cfg.problem_type = "knapsack";
  cfg.problem_text = "0 1\n";
  CHECK_THROWS_AS(run_experiment(cfg), ValidationError);
  RunConfig bad;
  bad.command = "teleport";
  CHECK_THROWS_AS(run_experiment(bad), ValidationError);
}
