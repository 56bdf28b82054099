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

#include <cstdint>
#include <string>
#include <vector>

namespace qtk {

enum class OptimizationSense { kMinimize, kMaximize };

/// Quadratic cost over +/-1 spins:
///   energy(s) = sum_{i<j} J_ij s_i s_j + sum_i h_i s_i + offset.
/// The bit convention is fixed as z_i = (1 - s_i)/2 everywhere, and bit i of a
/// basis index refers to qubit i (most significant first).
class IsingProblem {
 public:
  IsingProblem(int n, OptimizationSense sense = OptimizationSense::kMinimize);

  int num_spins() const { return n_; }
  OptimizationSense sense() const { return sense_; }

  double coupling(int i, int j) const;
  void set_coupling(int i, int j, double value);  // i != j; stored upper-triangular
  double field(int i) const { return h_[i]; }
  void set_field(int i, double value) { h_[i] = value; }
  double offset() const { return offset_; }
  void set_offset(double value) { offset_ = value; }

  /// Energy of a spin configuration (each entry +1 or -1).
  double energy(const std::vector<int>& spins) const;

  /// Energy of the bit pattern z (bit i of the basis index = qubit i).
  double energy_of_bits(std::uint64_t z) const;

  /// All 2^n energies in basis order; n is capped at 24.
  std::vector<double> energy_table() const;

 private:
  int n_;
  OptimizationSense sense_;
  std::vector<double> j_;  // upper-triangular, row-major
  std::vector<double> h_;
  double offset_ = 0.0;

  std::size_t idx(int i, int j) const;
};

/// QUBO cost q(z) = sum_j Q_jj z_j + sum_{j<k} Q_jk z_j z_k + constant.
/// The constant is carried so Ising round trips preserve energies exactly.
class QuboProblem {
 public:
  explicit QuboProblem(int n);

  int num_vars() const { return n_; }
  double q(int i, int j) const;
  void set_q(int i, int j, double value);  // i <= j
  double constant() const { return constant_; }
  void set_constant(double value) { constant_ = value; }

  double value(std::uint64_t z) const;

 private:
  int n_;
  std::vector<double> q_;
  double constant_ = 0.0;

  std::size_t idx(int i, int j) const;
};

/// Subset sum (sum_i n_i z_i - m)^2 in expanded-square Ising form:
/// J_ij = n_i n_j / 2, h_i = -(sum_j n_j / 2 - m) n_i,
/// offset = (sum_j n_j / 2 - m)^2 + sum_i n_i^2 / 4.
IsingProblem encode_subset_sum(const std::vector<long long>& nums, long long m);

/// Number partitioning (sum_i n_i s_i)^2: J_ij = 2 n_i n_j, offset = sum n_i^2.
IsingProblem encode_number_partition(const std::vector<long long>& nums);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Max-Cut cost (maximize sense): cut(z) = 1/2 sum_{i<j} w_ij (1 - s_i s_j).
IsingProblem encode_maxcut(int num_vertices, const std::vector<WeightedEdge>& edges);

/// Ising -> QUBO under z = (1 - s)/2; energies agree on every assignment.
QuboProblem qubo_from_ising(const IsingProblem& p);

/// QUBO -> Ising inverse of the above.
IsingProblem ising_from_qubo(const QuboProblem& q,
                             OptimizationSense sense = OptimizationSense::kMinimize);

struct GroundResult {
  double optimal_energy = 0.0;
  std::vector<std::uint64_t> optimizers;  // all optimal bit patterns
};

/// Exhaustive scan over all 2^n assignments (n <= 24), honoring the sense.
GroundResult brute_force_ground(const IsingProblem& p);

/// Formats a bit pattern as an MSB-first string of length n.
std::string bits_to_string(std::uint64_t z, int n);

}  // namespace qtk
