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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code row sums,
/// O(2^n n); n <= 20.
cdouble permanent(const Eigen::MatrixXcd& a);

/// Brute-force permutation-sum oracle, n <= 8.
cdouble permanent_naive(const Eigen::MatrixXcd& a);

/// An M-mode linear-optics network; the matrix must be unitary to 1e-10.
struct Interferometer {
  Eigen::MatrixXcd u;

  explicit Interferometer(Eigen::MatrixXcd matrix);
  int modes() const { return static_cast<int>(u.rows()); }
};

/// Haar-distributed unitary via QR of a complex Gaussian matrix with the
/// R-diagonal phase fix.
Interferometer random_interferometer(int modes, Rng& rng);

/// Photon occupation numbers per mode.
struct FockConfig {
  std::vector<int> occupations;

  int total() const;
  void validate() const;
};

/// All configurations of N photons in M modes, lexicographic order.
std::vector<FockConfig> enumerate_fock_configs(int photons, int modes);

/// Output probability |Per(U_S)|^2 / (S_1! ... S_M!), where U_S repeats
/// column i S_i times and takes the rows of the occupied input modes.
/// Input occupations must be 0/1 and photon numbers must match.
double boson_prob(const Interferometer& u, const FockConfig& input, const FockConfig& output);

struct BosonDistribution {
  std::vector<FockConfig> configs;
  std::vector<double> probabilities;
};

/// The full output distribution for the standard input |1...1 0...0> with N
/// photons; the configuration count C(N+M-1, N) is capped at 1e5.
BosonDistribution boson_distribution(const Interferometer& u, int photons, int modes);

/// Diagonal gates available to IQP circuits.
enum class IqpGateKind { kSqrtCZ, kTPower, kZ, kCZ, kCCZ };

struct IqpOp {
  IqpGateKind kind;
  std::vector<int> targets;
  int power = 1;  // for T^k
};

/// An IQP circuit H^(x)n D H^(x)n with D the listed diagonal ops.
struct IqpCircuit {
  int num_qubits = 0;
  std::vector<IqpOp> ops;
  int gateset = 1;  // 1 = {sqrt CZ, T powers}; 2 = {Z, CZ, CCZ}

  void validate() const;
};

/// Uniformly random diagonal sequence of the given depth from gate set 1 or 2.
IqpCircuit iqp_random(int n, int gateset, int depth, Rng& rng);

struct IqpSampleResult {
  std::vector<double> distribution;  // over basis states
  std::vector<std::string> samples;  // MSB-first bitstrings
};

/// Exact distribution P_x = |<x| H^n D H^n |0...0>|^2 plus samples from it.
IqpSampleResult iqp_sample(const IqpCircuit& circuit, std::uint64_t shots, Rng& rng);

struct HadamardGadgetResult {
  double p_plus = 0.0;          // exactly 1/2 for every input
  QState plus_branch;           // H |psi>
  QState minus_branch;          // X H |psi>
  int sampled_outcome = 0;
};

/// Ancilla |+>, CZ, X-basis measurement on the data qubit; both conditional
/// branches are returned and one outcome is sampled.
HadamardGadgetResult hadamard_gadget(const QState& psi, Rng& rng);

}  // namespace qtk
