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

#include <map>
#include <string>
#include <vector>

#include "qtk/circuit.hpp"
#include "qtk/pauli.hpp"
#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// A small stabilizer code held as data: generators, logical operators, an
/// encoder circuit, and a syndrome lookup decoder. The three built-ins share
/// all machinery; user codes can be assembled from the same pieces.
class StabilizerCode {
 public:
  StabilizerCode(std::string name, int n, int k, int d,
                 std::vector<PauliString> generators, PauliString logical_x,
                 PauliString logical_z, Circuit encoder);

  static StabilizerCode bit_flip();    // [[3,1,1]], corrects single X
  static StabilizerCode phase_flip();  // [[3,1,1]], corrects single Z
  static StabilizerCode shor_nine();   // [[9,1,3]], corrects any single-qubit error

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int d() const { return d_; }
  const std::vector<PauliString>& generators() const { return generators_; }
  const PauliString& logical_x() const { return logical_x_; }
  const PauliString& logical_z() const { return logical_z_; }
  const Circuit& encoder() const { return encoder_; }

  /// Registers the correction for one syndrome (signs in generator order).
  void add_decoder_entry(const std::vector<int>& syndrome, const PauliString& correction);

  /// Syndrome of a Pauli error: entry i is -1 when the error anticommutes
  /// with generator i.
  std::vector<int> syndrome_of(const PauliString& error) const;

  /// Lookup correction; throws ValidationError for unknown syndromes.
  const PauliString& lookup_correction(const std::vector<int>& syndrome) const;
  bool has_correction(const std::vector<int>& syndrome) const;

 private:
  std::string name_;
  int n_, k_, d_;
  std::vector<PauliString> generators_;
  PauliString logical_x_, logical_z_;
  Circuit encoder_;
  std::map<std::vector<int>, PauliString> decoder_;
};

/// alpha |0_L> + beta |1_L> through the encoder circuit.
QState encode(const StabilizerCode& code, cdouble alpha, cdouble beta);

/// Measures each generator projectively, in order. Outcomes are +/-1; on code
/// states and single-error states they are deterministic and leave the
/// encoded coefficients untouched.
std::pair<std::vector<int>, QState> syndrome_extract(const StabilizerCode& code,
                                                     const QState& state, Rng& rng);

/// Lookup-table decoding: syndrome -> minimum-weight correction.
const PauliString& recover(const StabilizerCode& code, const std::vector<int>& syndrome);

/// Full cycle: extract, look up, apply. The error must lie in the code's
/// correctable class for the output to match the encoded input.
QState correct_cycle(const StabilizerCode& code, const QState& state, Rng& rng);

enum class ErrorKind { kBitFlip, kPhaseFlip, kDepolarizing };

struct PauliErrorModel {
  double p = 0.0;
  ErrorKind kind = ErrorKind::kBitFlip;
};

/// One iid sample of the error model over n qubits.
PauliString sample_error(const PauliErrorModel& model, int n, Rng& rng);

struct LogicalErrorRate {
  double rate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t failures = 0;
  std::uint64_t trials = 0;
};

/// Monte-Carlo estimate: sample iid per-qubit errors, run a correction cycle,
/// count fidelity failures against the encoded input.
LogicalErrorRate logical_error_rate(const StabilizerCode& code, const PauliErrorModel& model,
                                    std::uint64_t trials, Rng& rng);

/// Exact failure probability of the bit-flip code under the bit-flip model:
/// 3 p^2 (1-p) + p^3.
double bitflip_code_exact_failure(double p);

/// Checks the stabilizer error-correction conditions for an error set by
/// enumeration: every product E_j^† E_k must either anticommute with some
/// generator or lie in the stabilizer group itself. Intended for small codes.
bool satisfies_error_correction_conditions(const StabilizerCode& code,
                                           const std::vector<PauliString>& errors);

}  // namespace qtk
