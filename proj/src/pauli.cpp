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

#include "qtk/pauli.hpp"

#include <array>

#include "qtk/errors.hpp"

namespace qtk {

namespace {

// Index of a single-qubit Pauli in {I, X, Z, Y} as x + 2z.
inline int pauli_index(bool x, bool z) { return (x ? 1 : 0) + (z ? 2 : 0); }

// phase_table[a][b] = exponent c of i in  A * B = i^c * C  for single-qubit
// Paulis indexed I=0, X=1, Z=2, Y=3 (with Y the genuine Hermitian Y).
constexpr std::array<std::array<int, 4>, 4> kMulPhase = {{
    // I  X  Z  Y
    {{0, 0, 0, 0}},  // I *
    {{0, 0, 3, 1}},  // X *   (XZ = -iY, XY = iZ)
    {{0, 1, 0, 3}},  // Z *   (ZX = iY,  ZY = -iX)
    {{0, 3, 1, 0}},  // Y *   (YX = -iZ, YZ = iX)
}};

}  // namespace

PauliString PauliString::from_label(const std::string& label) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
    if (label[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < label.size() && label[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  PauliString p(static_cast<int>(label.size() - pos));
  p.phase_ = phase % 4;
  for (int q = 0; pos < label.size(); ++pos, ++q) {
    switch (label[pos]) {
      case 'I': break;
      case 'X': p.x_[q] = 1; break;
      case 'Y': p.x_[q] = 1; p.z_[q] = 1; break;
      case 'Z': p.z_[q] = 1; break;
      default: throw ValidationError("bad Pauli label: " + label);
    }
  }
  return p;
}

PauliString PauliString::single(int n, int qubit, char p) {
  if (qubit < 0 || qubit >= n) throw ValidationError("Pauli qubit out of range");
  PauliString out(n);
  switch (p) {
    case 'I': break;
    case 'X': out.x_[qubit] = 1; break;
    case 'Y': out.x_[qubit] = 1; out.z_[qubit] = 1; break;
    case 'Z': out.z_[qubit] = 1; break;
    default: throw ValidationError(std::string("bad Pauli letter: ") + p);
  }
  return out;
}

bool PauliString::is_identity() const {
  for (int q = 0; q < n_; ++q)
    if (x_[q] || z_[q]) return false;
  return true;
}

int PauliString::weight() const {
  int w = 0;
  for (int q = 0; q < n_; ++q)
    if (x_[q] || z_[q]) ++w;
  return w;
}

std::complex<double> PauliString::phase_factor() const {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_];
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (n_ != other.n_) throw ValidationError("PauliString size mismatch");
  PauliString out(n_);
  int phase = phase_ + other.phase_;
  for (int q = 0; q < n_; ++q) {
    phase += kMulPhase[pauli_index(x_[q], z_[q])][pauli_index(other.x_[q], other.z_[q])];
    out.x_[q] = x_[q] ^ other.x_[q];
    out.z_[q] = z_[q] ^ other.z_[q];
  }
  out.phase_ = phase % 4;
  return out;
}

PauliString PauliString::adjoint() const {
  PauliString out = *this;
  // The tensor part is Hermitian; only the scalar i^phase conjugates.
  out.phase_ = (4 - phase_) % 4;
  return out;
}

bool PauliString::operator==(const PauliString& other) const {
  return n_ == other.n_ && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::equal_up_to_phase(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

std::string PauliString::label() const {
  std::string out;
  if (phase_ == 2 || phase_ == 3) out += '-';
  if (phase_ == 1 || phase_ == 3) out += 'i';
  for (int q = 0; q < n_; ++q) {
    const int idx = pauli_index(x_[q], z_[q]);
    out += "IXZY"[idx];
  }
  return out;
}

std::vector<std::complex<double>> PauliString::to_matrix() const {
  using C = std::complex<double>;
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<C> m(dim * dim, C{0, 0});
  // P|col> = factor(col) |col ^ flip>, column by column.
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = col;
    C factor = phase_factor();
    for (int q = 0; q < n_; ++q) {
      const std::size_t bit = (col >> (n_ - 1 - q)) & 1u;
      const int idx = pauli_index(x_[q], z_[q]);
      switch (idx) {
        case 0: break;
        case 1:  // X
          row ^= std::size_t{1} << (n_ - 1 - q);
          break;
        case 2:  // Z
          if (bit) factor = -factor;
          break;
        case 3:  // Y = [[0,-i],[i,0]]
          row ^= std::size_t{1} << (n_ - 1 - q);
          factor *= bit ? C{0, -1} : C{0, 1};
          break;
      }
    }
    m[row * dim + col] = factor;
  }
  return m;
}

bool pauli_commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) throw ValidationError("PauliString size mismatch");
  int anti = 0;
  for (int i = 0; i < p.num_qubits(); ++i)
    anti ^= (p.x_bit(i) && q.z_bit(i)) ^ (p.z_bit(i) && q.x_bit(i));
  return anti == 0;
}

PauliString conjugate_clifford(const CliffordOp& op, const PauliString& p) {
  const int n = p.num_qubits();
  auto check = [&](int q) {
    if (q < 0 || q >= n) throw ValidationError("Clifford target out of range");
  };
  PauliString out = p;
  const int a = op.a, b = op.b;
  const bool xa = p.x_bit(a), za = p.z_bit(a);
  switch (op.kind) {
    case CliffordOp::Kind::H:
      check(a);
      out.set_x(a, za);
      out.set_z(a, xa);
      if (xa && za) out.set_phase_exp(out.phase_exp() + 2);  // HYH = -Y
      break;
    case CliffordOp::Kind::S:
      check(a);
      out.set_z(a, za ^ xa);
      if (xa && za) out.set_phase_exp(out.phase_exp() + 2);  // SYS+ = -X
      break;
    case CliffordOp::Kind::X:
      check(a);
      if (za) out.set_phase_exp(out.phase_exp() + 2);
      break;
    case CliffordOp::Kind::Y:
      check(a);
      if (xa != za) out.set_phase_exp(out.phase_exp() + 2);
      break;
    case CliffordOp::Kind::Z:
      check(a);
      if (xa) out.set_phase_exp(out.phase_exp() + 2);
      break;
    case CliffordOp::Kind::CNOT: {
      check(a);
      check(b);
      if (a == b) throw ValidationError("CNOT control equals target");
      const bool xb = p.x_bit(b), zb = p.z_bit(b);
      out.set_x(b, xb ^ xa);
      out.set_z(a, za ^ zb);
      // Sign flips exactly when the pair is {XY <-> YX}-like on (a, b):
      // x_a z_b (x_b + z_a + 1) in GF(2).
      if (xa && zb && (xb == za)) out.set_phase_exp(out.phase_exp() + 2);
      break;
    }
    case CliffordOp::Kind::CZ: {
      check(a);
      check(b);
      if (a == b) throw ValidationError("CZ qubits equal");
      // CZ = (I x H) CNOT (I x H)
      PauliString tmp = conjugate_clifford(CliffordOp::h(b), p);
      tmp = conjugate_clifford(CliffordOp::cnot(a, b), tmp);
      out = conjugate_clifford(CliffordOp::h(b), tmp);
      break;
    }
  }
  return out;
}

}  // namespace qtk
