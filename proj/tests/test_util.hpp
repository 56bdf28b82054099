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
//
// Shared test oracles: dense linear algebra on Eigen, independent of the
// statevector kernels they are used to check.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qtk/circuit.hpp"
#include "qtk/gates.hpp"
#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk::test {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix gate_matrix(const GateSpec& g) {
  const auto d = static_cast<Eigen::Index>(g.dim());
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = g.entry(r, c);
  return m;
}

inline Matrix pauli_matrix(const PauliString& p) {
  const auto dense = p.to_matrix();
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << p.num_qubits());
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = dense[r * d + c];
  return m;
}

inline Vector state_vector(const QState& s) {
  Vector v(static_cast<Eigen::Index>(s.dim()));
  for (std::uint64_t z = 0; z < s.dim(); ++z) v(static_cast<Eigen::Index>(z)) = s.amplitude(z);
  return v;
}

inline QState to_state(int n, const Vector& v) {
  std::vector<cdouble> amps(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) amps[i] = v(i);
  return QState(n, std::move(amps));
}

/// Full unitary of a circuit, built column by column through the simulator.
inline Matrix circuit_unitary(const Circuit& c) {
  const auto d = static_cast<Eigen::Index>(std::int64_t{1} << c.num_qubits);
  Matrix m(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    QState in = QState::basis_state(c.num_qubits, static_cast<std::uint64_t>(col));
    m.col(col) = state_vector(simulate(c, in));
  }
  return m;
}

/// Embeds a k-qubit gate on the given targets of an n-qubit register
/// (independent dense route used to cross-check apply_gate).
inline Matrix embed_gate(int n, const GateSpec& g, const std::vector<int>& targets) {
  const auto d = static_cast<Eigen::Index>(std::int64_t{1} << n);
  Matrix m = Matrix::Zero(d, d);
  const int k = g.arity;
  for (std::int64_t col = 0; col < d; ++col) {
    std::size_t sub = 0;
    for (int i = 0; i < k; ++i)
      sub |= ((col >> (n - 1 - targets[i])) & 1) << (k - 1 - i);
    for (std::size_t r = 0; r < g.dim(); ++r) {
      std::int64_t row = col;
      for (int i = 0; i < k; ++i) {
        const std::int64_t bit = (r >> (k - 1 - i)) & 1;
        const std::int64_t mask = std::int64_t{1} << (n - 1 - targets[i]);
        row = (row & ~mask) | (bit << (n - 1 - targets[i]));
      }
      m(row, col) += g.entry(r, sub);
    }
  }
  return m;
}

inline Matrix haar_unitary(int dim, Rng& rng) {
  Matrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = cdouble{random_gaussian(rng), random_gaussian(rng)};
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const cdouble d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline QState random_state(int n, Rng& rng) {
  std::vector<cdouble> amps(std::size_t{1} << n);
  for (auto& a : amps) a = cdouble{random_gaussian(rng), random_gaussian(rng)};
  QState s(n, std::move(amps));
  s.normalize();
  return s;
}

/// e^{-i t H} for Hermitian H, via eigendecomposition.
inline Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& vals = es.eigenvalues();
  const Matrix& vecs = es.eigenvectors();
  Vector phases(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    phases(i) = std::exp(cdouble{0, -t * vals(i)});
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Distance up to global phase: min over phases of max-abs difference.
inline double diff_up_to_phase(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) < 1e-12) return max_abs_diff(a, b);
  const cdouble phase = b(r, c) / a(r, c);
  if (std::abs(std::abs(phase) - 1.0) > 1e-6) return max_abs_diff(a, b);
  return max_abs_diff(a * phase, b);
}

}  // namespace qtk::test
