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

#include "qtk/state.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

namespace {

void check_qubit(const QState& state, int q) {
  if (q < 0 || q >= state.num_qubits()) throw ValidationError("qubit index out of range");
}

}  // namespace

QState::QState(int num_qubits, int qubit_cap) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw ValidationError("QState requires at least one qubit");
  if (num_qubits > qubit_cap) throw CapExceeded("QState exceeds the qubit cap");
  amps_.assign(std::uint64_t{1} << num_qubits, cdouble{0, 0});
  amps_[0] = 1.0;
}

QState::QState(int num_qubits, std::vector<cdouble> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (num_qubits < 1 || amps_.size() != (std::uint64_t{1} << num_qubits))
    throw ValidationError("QState amplitude vector has wrong length");
}

QState QState::basis_state(int num_qubits, std::uint64_t index) {
  QState s(num_qubits);
  if (index >= s.dim()) throw ValidationError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

QState QState::one_qubit(cdouble alpha, cdouble beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > 1e-9) throw ValidationError("unnormalized single-qubit state");
  return QState(1, std::vector<cdouble>{alpha, beta});
}

QState QState::plus_state(int num_qubits) {
  QState s(num_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
  std::fill(s.amps_.begin(), s.amps_.end(), cdouble{a, 0});
  return s;
}

double QState::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

void QState::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n <= 0.0) throw std::logic_error("cannot normalize a zero state");
  for (auto& a : amps_) a /= n;
}

double QState::prob_one(int q) const {
  check_qubit(*this, q);
  const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - q);
  double p = 0.0;
  for (std::uint64_t z = 0; z < dim(); ++z)
    if (z & mask) p += std::norm(amps_[z]);
  return p;
}

void apply_gate_inplace(QState& state, const GateSpec& gate, const std::vector<int>& targets) {
  const int n = state.num_qubits();
  const int k = gate.arity;
  if (static_cast<int>(targets.size()) != k)
    throw ValidationError("apply_gate: target count does not match gate arity");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    check_qubit(state, targets[i]);
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) throw ValidationError("apply_gate: duplicate targets");
  }
  if (gate.matrix.size() != gate.dim() * gate.dim())
    throw ValidationError("apply_gate: malformed gate matrix");

  // Bit position of each target; targets[0] is the gate's own MSB.
  std::uint64_t target_mask = 0;
  std::vector<int> bitpos(k);
  for (int i = 0; i < k; ++i) {
    bitpos[i] = n - 1 - targets[i];
    target_mask |= std::uint64_t{1} << bitpos[i];
  }

  auto& amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  const std::size_t kd = std::size_t{1} << k;
  std::vector<std::uint64_t> offsets(kd);
  for (std::size_t sub = 0; sub < kd; ++sub) {
    std::uint64_t off = 0;
    for (int i = 0; i < k; ++i)
      if ((sub >> (k - 1 - i)) & 1u) off |= std::uint64_t{1} << bitpos[i];
    offsets[sub] = off;
  }

  std::vector<cdouble> in(kd), out(kd);
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;  // enumerate groups once, at targets = 0
    for (std::size_t sub = 0; sub < kd; ++sub) in[sub] = amps[base | offsets[sub]];
    for (std::size_t r = 0; r < kd; ++r) {
      cdouble acc{0, 0};
      const cdouble* row = gate.matrix.data() + r * kd;
      for (std::size_t c = 0; c < kd; ++c) acc += row[c] * in[c];
      out[r] = acc;
    }
    for (std::size_t sub = 0; sub < kd; ++sub) amps[base | offsets[sub]] = out[sub];
  }
}

QState apply_gate(const QState& state, const GateSpec& gate, const std::vector<int>& targets) {
  QState out = state;
  apply_gate_inplace(out, gate, targets);
  return out;
}

QState apply_pauli(const QState& state, const PauliString& p) {
  if (p.num_qubits() != state.num_qubits())
    throw ValidationError("apply_pauli: size mismatch");
  const int n = state.num_qubits();
  std::uint64_t flip = 0;
  for (int q = 0; q < n; ++q)
    if (p.x_bit(q)) flip |= std::uint64_t{1} << (n - 1 - q);

  QState out = state;
  auto& dst = out.amplitudes();
  const auto& src = state.amplitudes();
  const cdouble global = p.phase_factor();
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    // Z (and the Z half of Y) contributes (-1)^<z bits>; the X half relabels.
    cdouble factor = global;
    for (int q = 0; q < n; ++q) {
      const bool bit = (z >> (n - 1 - q)) & 1u;
      if (p.x_bit(q) && p.z_bit(q)) {
        factor *= bit ? cdouble{0, -1} : cdouble{0, 1};
      } else if (p.z_bit(q) && bit) {
        factor = -factor;
      }
    }
    dst[z ^ flip] = factor * src[z];
  }
  return out;
}

std::pair<double, QState> measure_qubit_forced(const QState& state, int q, int outcome) {
  check_qubit(state, q);
  const std::uint64_t mask = std::uint64_t{1} << (state.num_qubits() - 1 - q);
  QState post = state;
  auto& amps = post.amplitudes();
  double p = 0.0;
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    const bool bit = (z & mask) != 0;
    if (bit == (outcome != 0)) {
      p += std::norm(amps[z]);
    } else {
      amps[z] = 0.0;
    }
  }
  if (p > 0.0) {
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : amps) a *= inv;
  }
  return {p, std::move(post)};
}

std::pair<int, QState> measure_qubit(const QState& state, int q, Rng& rng) {
  check_qubit(state, q);
  const double p1 = state.prob_one(q);
  const double p0 = 1.0 - p1;
  int outcome;
  if (p0 < 1e-12) {
    outcome = 1;
  } else if (p1 < 1e-12) {
    outcome = 0;
  } else {
    outcome = random_unit(rng) < p0 ? 0 : 1;
  }
  auto [p, post] = measure_qubit_forced(state, q, outcome);
  if (p < 1e-12) throw std::logic_error("measured a zero-probability branch");
  return {outcome, std::move(post)};
}

std::pair<double, QState> measure_qubit_in_basis_forced(const QState& state, int q,
                                                        const cdouble b0[2], const cdouble b1[2],
                                                        int outcome) {
  check_qubit(state, q);
  const cdouble* b = outcome == 0 ? b0 : b1;
  const std::uint64_t mask = std::uint64_t{1} << (state.num_qubits() - 1 - q);
  QState post = state;
  auto& amps = post.amplitudes();
  const auto& src = state.amplitudes();
  double p = 0.0;
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    if (z & mask) continue;
    // Component along |b> of the (a0, a1) pair, redistributed onto |b>.
    const cdouble c = std::conj(b[0]) * src[z] + std::conj(b[1]) * src[z | mask];
    p += std::norm(c);
    amps[z] = c * b[0];
    amps[z | mask] = c * b[1];
  }
  if (p > 0.0) {
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : amps) a *= inv;
  }
  return {p, std::move(post)};
}

std::pair<int, QState> measure_qubit_in_basis(const QState& state, int q,
                                              const cdouble b0[2], const cdouble b1[2],
                                              Rng& rng) {
  auto [q0, post0] = measure_qubit_in_basis_forced(state, q, b0, b1, 0);
  int outcome;
  if (q0 < 1e-12) {
    outcome = 1;
  } else if (q0 > 1.0 - 1e-12) {
    outcome = 0;
  } else {
    outcome = random_unit(rng) < q0 ? 0 : 1;
  }
  if (outcome == 0) return {0, std::move(post0)};
  auto [q1, post1] = measure_qubit_in_basis_forced(state, q, b0, b1, 1);
  if (q1 < 1e-12) throw std::logic_error("measured a zero-probability branch");
  return {1, std::move(post1)};
}

std::pair<double, QState> measure_pauli_observable_forced(const QState& state,
                                                          const PauliString& g, int sign) {
  if (!g.is_hermitian()) throw ValidationError("observable must be Hermitian");
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  QState gpsi = apply_pauli(state, g);
  QState post = state;
  auto& amps = post.amplitudes();
  const auto& ga = gpsi.amplitudes();
  double p = 0.0;
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    amps[z] = 0.5 * (amps[z] + static_cast<double>(sign) * ga[z]);
    p += std::norm(amps[z]);
  }
  if (p > 0.0) {
    const double inv = 1.0 / std::sqrt(p);
    for (auto& a : amps) a *= inv;
  }
  return {p, std::move(post)};
}

std::tuple<int, double, QState> measure_pauli_observable(const QState& state,
                                                         const PauliString& g, Rng& rng) {
  const double exp_g = expectation_pauli(state, g);
  const double p_plus = 0.5 * (1.0 + exp_g);
  int sign;
  if (p_plus > 1.0 - 1e-12) {
    sign = +1;
  } else if (p_plus < 1e-12) {
    sign = -1;
  } else {
    sign = random_unit(rng) < p_plus ? +1 : -1;
  }
  auto [p, post] = measure_pauli_observable_forced(state, g, sign);
  if (p < 1e-12) throw std::logic_error("measured a zero-probability branch");
  return {sign, p, std::move(post)};
}

std::map<std::string, std::uint64_t> sample_counts(const QState& state, std::uint64_t shots,
                                                   Rng& rng) {
  if (shots < 1) throw ValidationError("sample_counts: shots must be >= 1");
  const std::uint64_t dim = state.dim();
  std::vector<double> cum(dim);
  double acc = 0.0;
  for (std::uint64_t z = 0; z < dim; ++z) {
    acc += std::norm(state.amplitude(z));
    cum[z] = acc;
  }
  const double total = acc;
  std::map<std::string, std::uint64_t> counts;
  const int n = state.num_qubits();
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = random_unit(rng) * total;
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    std::uint64_t z = it == cum.end() ? dim - 1 : static_cast<std::uint64_t>(it - cum.begin());
    std::string key(n, '0');
    for (int q = 0; q < n; ++q)
      if ((z >> (n - 1 - q)) & 1u) key[q] = '1';
    ++counts[key];
  }
  return counts;
}

double expectation_pauli(const QState& state, const PauliString& p) {
  if (!p.is_hermitian())
    throw ValidationError("expectation_pauli: observable must be Hermitian");
  QState pp = apply_pauli(state, p);
  const cdouble val = inner_product(state, pp);
  if (std::abs(val.imag()) >= 1e-10)
    throw std::logic_error("expectation of a Hermitian string came out complex");
  return val.real();
}

cdouble inner_product(const QState& phi, const QState& psi) {
  if (phi.num_qubits() != psi.num_qubits()) throw ValidationError("inner_product: size mismatch");
  cdouble acc{0, 0};
  const auto& a = phi.amplitudes();
  const auto& b = psi.amplitudes();
  for (std::uint64_t z = 0; z < phi.dim(); ++z) acc += std::conj(a[z]) * b[z];
  return acc;
}

double fidelity(const QState& phi, const QState& psi) {
  return std::norm(inner_product(phi, psi));
}

QState tensor(const QState& a, const QState& b) {
  const int n = a.num_qubits() + b.num_qubits();
  if (n > kDefaultQubitCap) throw CapExceeded("tensor: result exceeds the qubit cap");
  std::vector<cdouble> amps(std::uint64_t{1} << n);
  const std::uint64_t db = b.dim();
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    for (std::uint64_t j = 0; j < db; ++j) amps[i * db + j] = a.amplitude(i) * b.amplitude(j);
  return QState(n, std::move(amps));
}

QState remove_qubit(const QState& state, int q, const cdouble basis_vec[2]) {
  check_qubit(state, q);
  const int n = state.num_qubits();
  if (n < 2) throw ValidationError("remove_qubit: cannot drop the last qubit");
  const int bit = n - 1 - q;
  const std::uint64_t low_mask = (std::uint64_t{1} << bit) - 1;
  std::vector<cdouble> amps(std::uint64_t{1} << (n - 1), cdouble{0, 0});
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    const bool b = (z >> bit) & 1u;
    const std::uint64_t rest = ((z >> (bit + 1)) << bit) | (z & low_mask);
    amps[rest] += std::conj(basis_vec[b ? 1 : 0]) * state.amplitude(z);
  }
  QState out(n - 1, std::move(amps));
  out.normalize();
  return out;
}

QState extract_qubit(const QState& state, int q) {
  check_qubit(state, q);
  if (state.num_qubits() == 1) return state;
  // Take the row of largest norm in the (2 x rest) reshape; for a product
  // state every nonzero row is proportional to the qubit's state.
  const int n = state.num_qubits();
  const std::uint64_t mask = std::uint64_t{1} << (n - 1 - q);
  std::uint64_t best = 0;
  double best_norm = -1.0;
  for (std::uint64_t z = 0; z < state.dim(); ++z) {
    const std::uint64_t base = z & ~mask;
    const double w = std::norm(state.amplitude(base)) + std::norm(state.amplitude(base | mask));
    if (w > best_norm) {
      best_norm = w;
      best = base;
    }
  }
  QState out(1, std::vector<cdouble>{state.amplitude(best), state.amplitude(best | mask)});
  out.normalize();
  return out;
}

}  // namespace qtk
