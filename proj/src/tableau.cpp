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

#include "qtk/tableau.hpp"

#include <array>

#include "qtk/errors.hpp"

namespace qtk {

namespace {

// i-exponent of A*B for single-qubit Paulis indexed I=0, X=1, Z=2, Y=3.
constexpr std::array<std::array<int, 4>, 4> kMulPhase = {{
    {{0, 0, 0, 0}},
    {{0, 0, 3, 1}},
    {{0, 1, 0, 3}},
    {{0, 3, 1, 0}},
}};

inline int pidx(std::uint8_t x, std::uint8_t z) { return x + 2 * z; }

}  // namespace

Tableau::Tableau(int n) : n_(n) {
  if (n < 1) throw ValidationError("Tableau requires at least one qubit");
  x_.assign(2 * n, std::vector<std::uint8_t>(n, 0));
  z_.assign(2 * n, std::vector<std::uint8_t>(n, 0));
  phase_.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    x_[i][i] = 1;       // destabilizer X_i
    z_[n + i][i] = 1;   // stabilizer Z_i
  }
}

PauliString Tableau::row(int i) const {
  PauliString p(n_);
  for (int q = 0; q < n_; ++q) {
    p.set_x(q, x_[i][q]);
    p.set_z(q, z_[i][q]);
  }
  p.set_phase_exp(phase_[i]);
  return p;
}

void Tableau::row_mult(int dst, int src) {
  int phase = phase_[dst] + phase_[src];
  for (int q = 0; q < n_; ++q) {
    phase += kMulPhase[pidx(x_[dst][q], z_[dst][q])][pidx(x_[src][q], z_[src][q])];
    x_[dst][q] ^= x_[src][q];
    z_[dst][q] ^= z_[src][q];
  }
  phase_[dst] = static_cast<std::uint8_t>(phase % 4);
}

void Tableau::apply(const CliffordOp& op) {
  const int a = op.a, b = op.b;
  auto check = [&](int q) {
    if (q < 0 || q >= n_) throw ValidationError("tableau_apply: target out of range");
  };
  switch (op.kind) {
    case CliffordOp::Kind::H:
      check(a);
      for (int i = 0; i < 2 * n_; ++i) {
        if (x_[i][a] & z_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
        std::swap(x_[i][a], z_[i][a]);
      }
      break;
    case CliffordOp::Kind::S:
      check(a);
      for (int i = 0; i < 2 * n_; ++i) {
        if (x_[i][a] & z_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
        z_[i][a] ^= x_[i][a];
      }
      break;
    case CliffordOp::Kind::X:
      check(a);
      for (int i = 0; i < 2 * n_; ++i)
        if (z_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
      break;
    case CliffordOp::Kind::Y:
      check(a);
      for (int i = 0; i < 2 * n_; ++i)
        if (x_[i][a] ^ z_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
      break;
    case CliffordOp::Kind::Z:
      check(a);
      for (int i = 0; i < 2 * n_; ++i)
        if (x_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
      break;
    case CliffordOp::Kind::CNOT:
      check(a);
      check(b);
      if (a == b) throw ValidationError("CNOT control equals target");
      for (int i = 0; i < 2 * n_; ++i) {
        if (x_[i][a] && z_[i][b] && x_[i][b] == z_[i][a]) phase_[i] = (phase_[i] + 2) % 4;
        x_[i][b] ^= x_[i][a];
        z_[i][a] ^= z_[i][b];
      }
      break;
    case CliffordOp::Kind::CZ:
      check(a);
      check(b);
      if (a == b) throw ValidationError("CZ qubits equal");
      apply(CliffordOp::h(b));
      apply(CliffordOp::cnot(a, b));
      apply(CliffordOp::h(b));
      break;
  }
}

Tableau::MeasureResult Tableau::measure(int q, Rng& rng) {
  return measure_impl(q, nullptr, &rng);
}

Tableau::MeasureResult Tableau::measure_forced(int q, int forced_outcome) {
  return measure_impl(q, &forced_outcome, nullptr);
}

Tableau::MeasureResult Tableau::measure_impl(int q, const int* forced, Rng* rng) {
  if (q < 0 || q >= n_) throw ValidationError("measure: qubit out of range");

  // A stabilizer with an X at q anticommutes with Z_q: random outcome.
  int pivot = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (x_[i][q]) {
      pivot = i;
      break;
    }
  }

  if (pivot >= 0) {
    const int outcome = forced ? *forced : (random_bit(*rng) ? 1 : 0);
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != pivot && x_[i][q]) row_mult(i, pivot);
    }
    // The old pivot row becomes its own destabilizer; +/-Z_q joins the group.
    x_[pivot - n_] = x_[pivot];
    z_[pivot - n_] = z_[pivot];
    phase_[pivot - n_] = phase_[pivot];
    x_[pivot].assign(n_, 0);
    z_[pivot].assign(n_, 0);
    z_[pivot][q] = 1;
    phase_[pivot] = outcome ? 2 : 0;
    return {outcome, false};
  }

  // Deterministic: Z_q = +/- product of the stabilizers whose destabilizer
  // partner anticommutes with Z_q.
  PauliString acc = PauliString::identity(n_);
  for (int i = 0; i < n_; ++i) {
    if (x_[i][q]) acc = acc * row(n_ + i);
  }
  if (!acc.equal_up_to_phase(PauliString::single(n_, q, 'Z')))
    throw std::logic_error("tableau invariant broken in deterministic measurement");
  return {acc.sign() < 0 ? 1 : 0, true};
}

bool Tableau::invariants_hold() const {
  for (int i = 0; i < 2 * n_; ++i)
    if (phase_[i] % 2 != 0) return false;
  std::vector<PauliString> rows;
  rows.reserve(2 * n_);
  for (int i = 0; i < 2 * n_; ++i) rows.push_back(row(i));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!pauli_commutes(rows[n_ + i], rows[n_ + j])) return false;
      const bool anti = !pauli_commutes(rows[i], rows[n_ + j]);
      if (anti != (i == j)) return false;
    }
  }
  // Full rank of the 2n x 2n binary symplectic matrix by Gaussian elimination.
  std::vector<std::vector<std::uint8_t>> m(2 * n_, std::vector<std::uint8_t>(2 * n_, 0));
  for (int i = 0; i < 2 * n_; ++i) {
    for (int q = 0; q < n_; ++q) {
      m[i][q] = rows[i].x_bit(q) ? 1 : 0;
      m[i][n_ + q] = rows[i].z_bit(q) ? 1 : 0;
    }
  }
  int rank = 0;
  for (int col = 0; col < 2 * n_ && rank < 2 * n_; ++col) {
    int piv = -1;
    for (int r = rank; r < 2 * n_; ++r) {
      if (m[r][col]) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < 2 * n_; ++r) {
      if (r != rank && m[r][col]) {
        for (int c = 0; c < 2 * n_; ++c) m[r][c] ^= m[rank][c];
      }
    }
    ++rank;
  }
  return rank == 2 * n_;
}

Tableau tableau_new(int n) { return Tableau(n); }

void tableau_apply(Tableau& t, const CliffordOp& op) { t.apply(op); }

QState tableau_to_statevector(const Tableau& t) {
  const int n = t.num_qubits();
  if (n > 12) throw CapExceeded("tableau_to_statevector supports at most 12 qubits");
  // Prod_i (I + S_i)/2 is the rank-1 projector onto the stabilized state, so
  // applying it to any basis state with nonzero overlap recovers the state.
  for (std::uint64_t z0 = 0; z0 < (std::uint64_t{1} << n); ++z0) {
    QState psi = QState::basis_state(n, z0);
    for (int i = 0; i < n; ++i) {
      const QState spsi = apply_pauli(psi, t.stabilizer(i));
      auto& amps = psi.amplitudes();
      const auto& sa = spsi.amplitudes();
      for (std::uint64_t z = 0; z < psi.dim(); ++z) amps[z] = 0.5 * (amps[z] + sa[z]);
    }
    const double norm = psi.norm_squared();
    if (norm > 1e-12) {
      psi.normalize();
      return psi;
    }
  }
  throw std::logic_error("tableau projector annihilated every basis state");
}

}  // namespace qtk
