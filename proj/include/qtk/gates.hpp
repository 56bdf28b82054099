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

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qtk {

using cdouble = std::complex<double>;

/// A named k-qubit gate (k <= 3) with its dense 2^k x 2^k matrix, row-major.
struct GateSpec {
  std::string name;
  int arity = 1;
  std::vector<cdouble> matrix;

  std::size_t dim() const { return std::size_t{1} << arity; }
  cdouble entry(std::size_t r, std::size_t c) const { return matrix[r * dim() + c]; }

  /// max |(U+U - I)_ij| ; unitary gates keep this below 1e-12.
  double unitarity_defect() const;
  void check_unitary(double tol = 1e-12) const;
};

namespace gates {

GateSpec I();
GateSpec X();
GateSpec Y();
GateSpec Z();
GateSpec H();
GateSpec S();
GateSpec Sdg();
GateSpec T();
GateSpec RX(double theta);
GateSpec RY(double theta);
GateSpec RZ(double theta);
/// Phase gate diag(1, e^{2 pi i / 2^k}); negative k gives the conjugate phase.
GateSpec RK(int k);
GateSpec CNOT();
GateSpec CZ();
GateSpec SWAP();
GateSpec TOFFOLI();
GateSpec FREDKIN();

}  // namespace gates

/// Block matrix diag(I, U): the controlled version of `gate`, control first.
/// The resulting arity must not exceed 3.
GateSpec controlled(const GateSpec& gate);

}  // namespace qtk
