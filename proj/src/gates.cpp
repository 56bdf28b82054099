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

#include "qtk/gates.hpp"

#include <cmath>

#include "qtk/errors.hpp"

namespace qtk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cdouble kI{0.0, 1.0};
}  // namespace

double GateSpec::unitarity_defect() const {
  const std::size_t d = dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      cdouble acc{0, 0};
      for (std::size_t k = 0; k < d; ++k) acc += std::conj(entry(k, r)) * entry(k, c);
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

void GateSpec::check_unitary(double tol) const {
  if (matrix.size() != dim() * dim())
    throw ValidationError("gate '" + name + "': matrix size does not match arity");
  if (unitarity_defect() >= tol)
    throw ValidationError("gate '" + name + "' is not unitary");
}

namespace gates {

GateSpec I() { return {"I", 1, {1, 0, 0, 1}}; }
GateSpec X() { return {"X", 1, {0, 1, 1, 0}}; }
GateSpec Y() { return {"Y", 1, {0, -kI, kI, 0}}; }
GateSpec Z() { return {"Z", 1, {1, 0, 0, -1}}; }

GateSpec H() {
  const double s = 1.0 / std::sqrt(2.0);
  return {"H", 1, {s, s, s, -s}};
}

GateSpec S() { return {"S", 1, {1, 0, 0, kI}}; }
GateSpec Sdg() { return {"SDG", 1, {1, 0, 0, -kI}}; }
GateSpec T() { return {"T", 1, {1, 0, 0, std::exp(kI * (kPi / 4.0))}}; }

GateSpec RX(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {"RX", 1, {c, -kI * s, -kI * s, c}};
}

GateSpec RY(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {"RY", 1, {c, -s, s, c}};
}

GateSpec RZ(double theta) {
  return {"RZ", 1, {std::exp(-kI * (theta / 2.0)), 0, 0, std::exp(kI * (theta / 2.0))}};
}

GateSpec RK(int k) {
  if (k == 0) throw ValidationError("RK requires nonzero k");
  const double sign = k > 0 ? 1.0 : -1.0;
  const double denom = std::pow(2.0, std::abs(k));
  return {"RK", 1, {1, 0, 0, std::exp(sign * kI * (2.0 * kPi / denom))}};
}

GateSpec CNOT() {
  return {"CNOT", 2,
          {1, 0, 0, 0,
           0, 1, 0, 0,
           0, 0, 0, 1,
           0, 0, 1, 0}};
}

GateSpec CZ() {
  return {"CZ", 2,
          {1, 0, 0, 0,
           0, 1, 0, 0,
           0, 0, 1, 0,
           0, 0, 0, -1}};
}

GateSpec SWAP() {
  return {"SWAP", 2,
          {1, 0, 0, 0,
           0, 0, 1, 0,
           0, 1, 0, 0,
           0, 0, 0, 1}};
}

GateSpec TOFFOLI() {
  std::vector<cdouble> m(64, 0);
  for (std::size_t i = 0; i < 8; ++i) m[i * 8 + i] = 1;
  m[6 * 8 + 6] = 0;
  m[7 * 8 + 7] = 0;
  m[6 * 8 + 7] = 1;
  m[7 * 8 + 6] = 1;
  return {"TOFFOLI", 3, std::move(m)};
}

GateSpec FREDKIN() {
  std::vector<cdouble> m(64, 0);
  for (std::size_t i = 0; i < 8; ++i) m[i * 8 + i] = 1;
  m[5 * 8 + 5] = 0;
  m[6 * 8 + 6] = 0;
  m[5 * 8 + 6] = 1;
  m[6 * 8 + 5] = 1;
  return {"FREDKIN", 3, std::move(m)};
}

}  // namespace gates

GateSpec controlled(const GateSpec& gate) {
  if (gate.arity < 1) throw ValidationError("controlled: gate arity must be >= 1");
  if (gate.arity + 1 > 3) throw CapExceeded("controlled: resulting arity exceeds 3");
  const std::size_t d = gate.dim();
  const std::size_t dd = 2 * d;
  std::vector<cdouble> m(dd * dd, 0);
  for (std::size_t i = 0; i < d; ++i) m[i * dd + i] = 1;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[(d + r) * dd + (d + c)] = gate.entry(r, c);
  return {"C" + gate.name, gate.arity + 1, std::move(m)};
}

}  // namespace qtk
