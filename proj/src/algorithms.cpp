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

#include "qtk/algorithms.hpp"

#include <cmath>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxOracleBits = 20;
}  // namespace

BooleanOracle::BooleanOracle(int n, std::vector<std::uint8_t> table, Promise promise)
    : n_(n), table_(std::move(table)), promise_(promise) {
  if (n < 1 || n > kMaxOracleBits) throw ValidationError("oracle size out of range");
  if (table_.size() != (std::size_t{1} << n)) throw ValidationError("oracle table length mismatch");
  std::uint64_t ones = 0;
  for (auto v : table_) ones += (v != 0);
  switch (promise_) {
    case Promise::kConstantOrBalanced:
      if (ones != 0 && ones != table_.size() && ones != table_.size() / 2)
        throw ValidationError("oracle is neither constant nor balanced");
      break;
    case Promise::kSingleMarked:
      if (ones != 1) throw ValidationError("oracle must mark exactly one item");
      break;
    case Promise::kGeneral:
      break;
  }
}

BooleanOracle BooleanOracle::from_function(int n, const std::function<bool(std::uint64_t)>& f,
                                           Promise promise) {
  if (n < 1 || n > kMaxOracleBits) throw ValidationError("oracle size out of range");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = f(x) ? 1 : 0;
  return BooleanOracle(n, std::move(table), promise);
}

BooleanOracle BooleanOracle::marked_item(int n, std::uint64_t x0) {
  if (n < 1 || n > kMaxOracleBits) throw ValidationError("oracle size out of range");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  if (x0 >= table.size()) throw ValidationError("marked item out of range");
  table[x0] = 1;
  return BooleanOracle(n, std::move(table), Promise::kSingleMarked);
}

std::uint64_t BooleanOracle::marked() const {
  if (promise_ != Promise::kSingleMarked)
    throw ValidationError("oracle does not carry the single-marked promise");
  for (std::uint64_t x = 0; x < table_.size(); ++x)
    if (table_[x]) return x;
  throw std::logic_error("single-marked oracle with empty table");
}

void BooleanOracle::apply_phase(QState& state) const {
  if (state.num_qubits() != n_) throw ValidationError("oracle width does not match the state");
  auto& amps = state.amplitudes();
  for (std::uint64_t x = 0; x < amps.size(); ++x)
    if (table_[x]) amps[x] = -amps[x];
}

DeutschJozsaAnswer deutsch_jozsa(const BooleanOracle& oracle) {
  if (oracle.promise() != BooleanOracle::Promise::kConstantOrBalanced)
    throw ValidationError("deutsch_jozsa needs the constant-or-balanced promise");
  const int n = oracle.num_bits();
  QState state = QState::plus_state(n);
  oracle.apply_phase(state);
  for (int q = 0; q < n; ++q) apply_gate_inplace(state, gates::H(), {q});
  // Under the promise the |0...0> amplitude is exactly +/-1 or 0.
  const double p_zero = std::norm(state.amplitude(0));
  return p_zero > 0.5 ? DeutschJozsaAnswer::kConstant : DeutschJozsaAnswer::kBalanced;
}

double grover_success_closed_form(std::uint64_t num_items, std::uint64_t num_marked, int k) {
  const double theta =
      2.0 * std::asin(std::sqrt(static_cast<double>(num_marked) / static_cast<double>(num_items)));
  const double s = std::sin((k + 0.5) * theta);
  return s * s;
}

int grover_iterations(std::uint64_t num_items, std::uint64_t num_marked) {
  if (num_marked < 1 || num_marked >= num_items)
    throw ValidationError("grover_iterations requires 1 <= M < N");
  const double theta =
      2.0 * std::asin(std::sqrt(static_cast<double>(num_marked) / static_cast<double>(num_items)));
  // The success probability peaks where (k + 1/2) theta hits pi/2; the best
  // integer is one of the two neighbours of the continuous optimum.
  const double k_star = kPi / (2.0 * theta) - 0.5;
  const int k_low = std::max(0, static_cast<int>(std::floor(k_star)));
  int best_k = k_low;
  double best = grover_success_closed_form(num_items, num_marked, k_low);
  for (int k = k_low + 1; k <= k_low + 1; ++k) {
    const double p = grover_success_closed_form(num_items, num_marked, k);
    if (p > best + 1e-12) {
      best = p;
      best_k = k;
    }
  }
  return best_k;
}

GroverResult grover_search(int n, const BooleanOracle& oracle, int iterations, Rng& rng) {
  if (iterations < 0) throw ValidationError("grover_search: negative iteration count");
  if (oracle.num_bits() != n) throw ValidationError("grover_search: oracle width mismatch");
  const std::uint64_t x0 = oracle.marked();

  QState state = QState::plus_state(n);
  for (int k = 0; k < iterations; ++k) {
    oracle.apply_phase(state);
    // Diffusion: H^n (2|0><0| - 1) H^n.
    for (int q = 0; q < n; ++q) apply_gate_inplace(state, gates::H(), {q});
    auto& amps = state.amplitudes();
    for (std::uint64_t z = 1; z < amps.size(); ++z) amps[z] = -amps[z];
    for (int q = 0; q < n; ++q) apply_gate_inplace(state, gates::H(), {q});
  }

  const double success = std::norm(state.amplitude(x0));
  std::vector<double> probs(state.dim());
  for (std::uint64_t z = 0; z < state.dim(); ++z) probs[z] = std::norm(state.amplitude(z));
  const std::uint64_t z = random_discrete(rng, probs);
  std::string bits(n, '0');
  for (int q = 0; q < n; ++q)
    if ((z >> (n - 1 - q)) & 1u) bits[q] = '1';
  return {bits, success};
}

Circuit qft_circuit(int n) {
  if (n < 1) throw ValidationError("qft_circuit: n must be >= 1");
  Circuit c{n, {}};
  for (int i = 0; i < n; ++i) {
    c.append("H", {i});
    for (int k = 2; k <= n - i; ++k) c.append("CRK", {i + k - 1, i}, {static_cast<double>(k)});
  }
  for (int i = 0; i < n / 2; ++i) c.append("SWAP", {i, n - 1 - i});
  return c;
}

Circuit qft_inverse_circuit(int n) {
  const Circuit fwd = qft_circuit(n);
  Circuit inv{n, {}};
  for (auto it = fwd.ops.rbegin(); it != fwd.ops.rend(); ++it) {
    CircuitOp op = *it;
    if (op.gate == "CRK") op.params[0] = -op.params[0];
    // H and SWAP are self-inverse.
    inv.ops.push_back(std::move(op));
  }
  return inv;
}

PhaseEstConfig PhaseEstConfig::from_precision(int n_bits, double epsilon) {
  if (n_bits < 1 || epsilon <= 0.0 || epsilon >= 1.0)
    throw ValidationError("phase estimation requires n_bits >= 1 and 0 < epsilon < 1");
  const int extra = static_cast<int>(std::ceil(std::log2(2.0 + 1.0 / (2.0 * epsilon))));
  return {n_bits + extra, n_bits, epsilon};
}

PhaseEstConfig PhaseEstConfig::with_register(int t) {
  if (t < 1) throw ValidationError("phase estimation requires t >= 1");
  return {t, t, 0.0};
}

PhaseEstResult phase_estimate(const Eigen::MatrixXcd& u, const QState& eigenstate,
                              const PhaseEstConfig& cfg, std::uint64_t shots, Rng& rng,
                              bool require_eigenstate) {
  const int m = eigenstate.num_qubits();
  if (m > 8) throw CapExceeded("phase_estimate: system register larger than 8 qubits");
  const auto dim = static_cast<Eigen::Index>(eigenstate.dim());
  if (u.rows() != dim || u.cols() != dim)
    throw ValidationError("phase_estimate: unitary does not match the eigenstate width");
  const int t = cfg.t;
  if (t + m > kDefaultQubitCap) throw CapExceeded("phase_estimate: register exceeds the qubit cap");

  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi(i) = eigenstate.amplitude(i);
  if (require_eigenstate) {
    const Eigen::VectorXcd upsi = u * psi;
    const cdouble lambda = psi.dot(upsi);  // <psi|U|psi>
    if ((upsi - lambda * psi).norm() > 1e-8)
      throw ValidationError("phase_estimate: initial state is not an eigenvector");
  }

  // Counting register (qubits 0..t-1) starts in |+>^t; system register holds
  // the eigenstate. The joint amplitudes are blocked by the system index.
  const std::uint64_t sys_dim = eigenstate.dim();
  const std::uint64_t count_dim = std::uint64_t{1} << t;
  std::vector<cdouble> amps(count_dim * sys_dim);
  const double h = 1.0 / std::sqrt(static_cast<double>(count_dim));
  for (std::uint64_t k = 0; k < count_dim; ++k)
    for (std::uint64_t s = 0; s < sys_dim; ++s) amps[k * sys_dim + s] = h * psi(s);
  QState state(t + m, std::move(amps));

  // Counting qubit j controls U^(2^(t-1-j)); powers by repeated squaring.
  Eigen::MatrixXcd power = u;
  for (int j = t - 1; j >= 0; --j) {
    auto& a = state.amplitudes();
    for (std::uint64_t k = 0; k < count_dim; ++k) {
      if (!((k >> (t - 1 - j)) & 1u)) continue;
      Eigen::Map<Eigen::VectorXcd> block(a.data() + k * sys_dim, dim);
      block = (power * block).eval();
    }
    if (j > 0) power = (power * power).eval();
  }

  apply_circuit_inplace(state, qft_inverse_circuit(t));

  PhaseEstResult result;
  result.distribution.assign(count_dim, 0.0);
  for (std::uint64_t k = 0; k < count_dim; ++k) {
    double p = 0.0;
    for (std::uint64_t s = 0; s < sys_dim; ++s) p += std::norm(state.amplitude(k * sys_dim + s));
    result.distribution[k] = p;
  }
  result.mode = 0;
  for (std::uint64_t k = 1; k < count_dim; ++k)
    if (result.distribution[k] > result.distribution[result.mode]) result.mode = k;
  result.samples.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s)
    result.samples.push_back(random_discrete(rng, result.distribution));
  return result;
}

HadamardTestResult hadamard_test(const Circuit& q_circuit, const QState& psi, bool imaginary) {
  if (q_circuit.num_qubits != psi.num_qubits())
    throw ValidationError("hadamard_test: circuit and state width mismatch");
  const QState qpsi = simulate(q_circuit, psi);

  // Assemble (|0>psi + |1>Q psi)/sqrt(2), which is the state right after the
  // controlled-Q, then finish the ancilla rotations exactly.
  const std::uint64_t d = psi.dim();
  std::vector<cdouble> amps(2 * d);
  const double r = 1.0 / std::sqrt(2.0);
  for (std::uint64_t z = 0; z < d; ++z) {
    amps[z] = r * psi.amplitude(z);
    amps[d + z] = r * qpsi.amplitude(z);
  }
  QState joint(psi.num_qubits() + 1, std::move(amps));
  // The S+ on the ancilla turns the interference term into the imaginary part.
  if (imaginary) apply_gate_inplace(joint, gates::Sdg(), {0});
  apply_gate_inplace(joint, gates::H(), {0});

  double p0 = 0.0;
  for (std::uint64_t z = 0; z < d; ++z) p0 += std::norm(joint.amplitude(z));
  const double p1 = 1.0 - p0;
  return {p0, p1, p0 - p1};
}

double swap_test(const QState& f, const QState& g) {
  if (f.num_qubits() != g.num_qubits()) throw ValidationError("swap_test: size mismatch");
  const int m = f.num_qubits();
  QState joint = tensor(QState(1), tensor(f, g));
  apply_gate_inplace(joint, gates::H(), {0});
  for (int i = 0; i < m; ++i) apply_gate_inplace(joint, gates::FREDKIN(), {0, 1 + i, 1 + m + i});
  apply_gate_inplace(joint, gates::H(), {0});
  double p0 = 0.0;
  for (std::uint64_t z = 0; z < joint.dim() / 2; ++z) p0 += std::norm(joint.amplitude(z));
  return p0;
}

}  // namespace qtk
