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

#include <cmath>

#include "qtk/circuit.hpp"
#include "qtk/errors.hpp"
#include "qtk/gates.hpp"
#include "qtk/state.hpp"
#include "test_util.hpp"

using namespace qtk;
namespace tt = qtk::test;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("basis convention: qubit 0 is the most significant bit") {
  // |01> = X on qubit 1 of a 2-qubit register -> index 1.
  QState s(2);
  apply_gate_inplace(s, gates::X(), {1});
  CHECK(std::abs(s.amplitude(1) - 1.0) < 1e-15);
  // |10> -> index 2.
  QState t(2);
  apply_gate_inplace(t, gates::X(), {0});
  CHECK(std::abs(t.amplitude(2) - 1.0) < 1e-15);
}

TEST_CASE("X flips a basis state") {
  QState s(1);
  apply_gate_inplace(s, gates::X(), {0});
  CHECK(std::abs(s.amplitude(1) - 1.0) < 1e-15);
}

TEST_CASE("H creates the uniform superposition") {
  QState s(1);
  apply_gate_inplace(s, gates::H(), {0});
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amplitude(0) - r) < 1e-14);
  CHECK(std::abs(s.amplitude(1) - r) < 1e-14);
}

TEST_CASE("CNOT maps |11> to |10>") {
  QState s = QState::basis_state(2, 3);
  apply_gate_inplace(s, gates::CNOT(), {0, 1});
  CHECK(std::abs(s.amplitude(2) - 1.0) < 1e-15);
}

TEST_CASE("controlled() builds CNOT, CZ and controlled identity") {
  const GateSpec cx = controlled(gates::X());
  CHECK(tt::max_abs_diff(tt::gate_matrix(cx), tt::gate_matrix(gates::CNOT())) < 1e-15);
  const GateSpec cz = controlled(gates::Z());
  CHECK(tt::max_abs_diff(tt::gate_matrix(cz), tt::gate_matrix(gates::CZ())) < 1e-15);
  const GateSpec ci = controlled(gates::I());
  CHECK(tt::max_abs_diff(tt::gate_matrix(ci), tt::Matrix::Identity(4, 4)) < 1e-15);
  CHECK_THROWS_AS((void)controlled(gates::TOFFOLI()), CapExceeded);
}

TEST_CASE("built-in gates are unitary") {
  for (const auto& g : {gates::I(), gates::X(), gates::Y(), gates::Z(), gates::H(), gates::S(),
                        gates::T(), gates::RX(0.3), gates::RY(-1.2), gates::RZ(2.5),
                        gates::RK(3), gates::RK(-3), gates::CNOT(), gates::CZ(), gates::SWAP(),
                        gates::TOFFOLI(), gates::FREDKIN()}) {
    CAPTURE(g.name);
    CHECK(g.unitarity_defect() < 1e-12);
  }
}

TEST_CASE("apply_gate agrees with dense embedding on random cases") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(random_index(rng, 5));
    const int k = 1 + static_cast<int>(random_index(rng, std::min(n, 3)));
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < k) {
      const int t = static_cast<int>(random_index(rng, n));
      bool seen = false;
      for (int u : targets) seen |= (u == t);
      if (!seen) targets.push_back(t);
    }
    const tt::Matrix u = tt::haar_unitary(1 << k, rng);
    GateSpec g{"U", k, {}};
    g.matrix.resize(std::size_t{1} << (2 * k));
    for (Eigen::Index r = 0; r < u.rows(); ++r)
      for (Eigen::Index c = 0; c < u.cols(); ++c) g.matrix[r * u.cols() + c] = u(r, c);

    const QState in = tt::random_state(n, rng);
    const QState out = apply_gate(in, g, targets);
    const tt::Vector expect = tt::embed_gate(n, g, targets) * tt::state_vector(in);
    CHECK((expect - tt::state_vector(out)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(out.norm_squared() - 1.0) < 1e-12);
  }
}

TEST_CASE("apply_gate rejects bad targets") {
  QState s(2);
  CHECK_THROWS_AS(apply_gate_inplace(s, gates::X(), {2}), ValidationError);
  CHECK_THROWS_AS(apply_gate_inplace(s, gates::CNOT(), {0, 0}), ValidationError);
  CHECK_THROWS_AS(apply_gate_inplace(s, gates::CNOT(), {0}), ValidationError);
}

TEST_CASE("qubit cap is enforced") {
  CHECK_THROWS_AS(QState(7, 6), CapExceeded);
}

TEST_CASE("measuring |0> gives 0 with certainty") {
  Rng rng(1);
  QState s(1);
  auto [bit, post] = measure_qubit(s, 0, rng);
  CHECK(bit == 0);
  CHECK(std::abs(post.amplitude(0) - 1.0) < 1e-15);
}

TEST_CASE("measuring |+> gives both outcomes with near-equal frequency") {
  Rng rng(2);
  QState plus(1);
  apply_gate_inplace(plus, gates::H(), {0});
  int ones = 0;
  const int trials = 100000;
  for (int i = 0; i < trials; ++i) {
    auto [bit, post] = measure_qubit(plus, 0, rng);
    ones += bit;
  }
  const double sigma = std::sqrt(trials * 0.25);
  CHECK(std::abs(ones - trials / 2.0) < 5 * sigma);
}

TEST_CASE("Bell state measurement collapses to |mm>") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    QState s(2);
    apply_gate_inplace(s, gates::H(), {0});
    apply_gate_inplace(s, gates::CNOT(), {0, 1});
    auto [m, post] = measure_qubit(s, 0, rng);
    const QState expect = QState::basis_state(2, m ? 3 : 0);
    CHECK(fidelity(expect, post) > 1.0 - 1e-12);
  }
}

TEST_CASE("sample_counts on |1> is exact") {
  Rng rng(4);
  QState s = QState::basis_state(1, 1);
  const auto counts = sample_counts(s, 100, rng);
  CHECK(counts.size() == 1);
  CHECK(counts.at("1") == 100);
}

TEST_CASE("sample_counts on |+> is binomially consistent") {
  Rng rng(5);
  QState plus(1);
  apply_gate_inplace(plus, gates::H(), {0});
  const auto counts = sample_counts(plus, 100000, rng);
  const double sigma = std::sqrt(100000 * 0.25);
  CHECK(std::abs(static_cast<double>(counts.at("0")) - 50000.0) < 5 * sigma);
}

TEST_CASE("sample_counts on GHZ only hits 000 and 111") {
  Rng rng(6);
  QState s(3);
  apply_gate_inplace(s, gates::H(), {0});
  apply_gate_inplace(s, gates::CNOT(), {0, 1});
  apply_gate_inplace(s, gates::CNOT(), {1, 2});
  const auto counts = sample_counts(s, 10000, rng);
  for (const auto& [key, cnt] : counts) {
    (void)cnt;
    CHECK((key == "000" || key == "111"));
  }
}

TEST_CASE("measure_qubit marginals match sample_counts frequencies") {
  Rng rng(7);
  const QState s = tt::random_state(3, rng);
  const int trials = 40000;
  int ones_measure = 0;
  for (int i = 0; i < trials; ++i) {
    auto [m, post] = measure_qubit(s, 1, rng);
    ones_measure += m;
  }
  std::uint64_t ones_sample = 0;
  const auto counts = sample_counts(s, trials, rng);
  for (const auto& [key, cnt] : counts)
    if (key[1] == '1') ones_sample += cnt;
  const double p = s.prob_one(1);
  const double sigma = std::sqrt(trials * p * (1 - p));
  CHECK(std::abs(ones_measure - trials * p) < 5 * sigma);
  CHECK(std::abs(static_cast<double>(ones_sample) - trials * p) < 5 * sigma);
}

TEST_CASE("expectation values of Pauli strings") {
  QState zero(1);
  CHECK(expectation_pauli(zero, PauliString::from_label("Z")) == doctest::Approx(1.0));
  QState plus(1);
  apply_gate_inplace(plus, gates::H(), {0});
  CHECK(expectation_pauli(plus, PauliString::from_label("X")) == doctest::Approx(1.0));
  QState bell(2);
  apply_gate_inplace(bell, gates::H(), {0});
  apply_gate_inplace(bell, gates::CNOT(), {0, 1});
  CHECK(expectation_pauli(bell, PauliString::from_label("XX")) == doctest::Approx(1.0));
  // Cross-check against a dense 4x4 contraction.
  const tt::Vector v = tt::state_vector(bell);
  const tt::Matrix xx = tt::pauli_matrix(PauliString::from_label("XX"));
  CHECK(std::abs((v.adjoint() * xx * v)(0, 0).real() - 1.0) < 1e-12);
  CHECK_THROWS_AS((void)expectation_pauli(bell, PauliString::from_label("X")), ValidationError);
}

TEST_CASE("norm is preserved over a thousand random gates") {
  Rng rng(8);
  QState s = tt::random_state(5, rng);
  const std::vector<GateSpec> pool = {gates::H(),  gates::T(),    gates::S(),
                                      gates::RX(0.7), gates::RZ(-0.4), gates::CNOT(),
                                      gates::CZ(), gates::SWAP()};
  for (int i = 0; i < 1000; ++i) {
    const GateSpec& g = pool[random_index(rng, pool.size())];
    std::vector<int> targets;
    targets.push_back(static_cast<int>(random_index(rng, 5)));
    if (g.arity == 2) {
      int t;
      do {
        t = static_cast<int>(random_index(rng, 5));
      } while (t == targets[0]);
      targets.push_back(t);
    }
    apply_gate_inplace(s, g, targets);
  }
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("gate identity suite") {
  const tt::Matrix h = tt::gate_matrix(gates::H());
  const tt::Matrix x = tt::gate_matrix(gates::X());
  const tt::Matrix y = tt::gate_matrix(gates::Y());
  const tt::Matrix z = tt::gate_matrix(gates::Z());
  const tt::Matrix t = tt::gate_matrix(gates::T());

  CHECK(tt::max_abs_diff(h * x * h, z) < 1e-12);
  CHECK(tt::max_abs_diff(h * y * h, -y) < 1e-12);
  CHECK(tt::max_abs_diff(h * z * h, x) < 1e-12);
  CHECK(tt::max_abs_diff(x * y * x, -y) < 1e-12);
  CHECK(tt::diff_up_to_phase(h * t * h, tt::gate_matrix(gates::RX(kPi / 4))) < 1e-12);

  // CNOT = (I (x) H) CZ (I (x) H)
  Circuit c1{2, {}};
  c1.append("H", {1});
  c1.append("CZ", {0, 1});
  c1.append("H", {1});
  CHECK(tt::max_abs_diff(tt::circuit_unitary(c1), tt::gate_matrix(gates::CNOT())) < 1e-12);

  // Fredkin from three Toffolis.
  Circuit c2{3, {}};
  c2.append("TOFFOLI", {0, 2, 1});
  c2.append("TOFFOLI", {0, 1, 2});
  c2.append("TOFFOLI", {0, 2, 1});
  CHECK(tt::max_abs_diff(tt::circuit_unitary(c2), tt::gate_matrix(gates::FREDKIN())) < 1e-12);
}

TEST_CASE("applying U then U+ is the identity") {
  Rng rng(9);
  for (int k = 1; k <= 2; ++k) {
    const tt::Matrix u = tt::haar_unitary(1 << k, rng);
    GateSpec g{"U", k, {}}, gdg{"U+", k, {}};
    g.matrix.resize(std::size_t{1} << (2 * k));
    gdg.matrix.resize(std::size_t{1} << (2 * k));
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      for (Eigen::Index c = 0; c < u.cols(); ++c) {
        g.matrix[r * u.cols() + c] = u(r, c);
        gdg.matrix[r * u.cols() + c] = std::conj(u(c, r));
      }
    }
    const QState in = tt::random_state(3, rng);
    std::vector<int> targets = k == 1 ? std::vector<int>{1} : std::vector<int>{2, 0};
    QState out = apply_gate(apply_gate(in, g, targets), gdg, targets);
    CHECK(fidelity(in, out) > 1.0 - 1e-10);
  }
}

TEST_CASE("tensor, remove_qubit and extract_qubit round trips") {
  Rng rng(10);
  const QState a = tt::random_state(2, rng);
  const QState b = tt::random_state(1, rng);
  const QState ab = tensor(a, b);
  CHECK(fidelity(extract_qubit(ab, 2), b) > 1.0 - 1e-12);
  const cdouble zero_vec[2] = {1.0, 0.0};
  const QState c = tensor(a, QState(1));
  CHECK(fidelity(remove_qubit(c, 2, zero_vec), a) > 1.0 - 1e-12);
}

TEST_CASE("circuit validation reports bad ops") {
  Circuit c{2, {}};
  c.append("FOO", {0});
  CHECK_THROWS_AS(c.validate(), ValidationError);
  Circuit d{2, {}};
  d.append("H", {5});
  CHECK_THROWS_AS(d.validate(), ValidationError);
  Circuit e{2, {}};
  e.append("RX", {0});
  CHECK_THROWS_AS(e.validate(), ValidationError);
}
