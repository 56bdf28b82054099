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

#include "qtk/ising.hpp"

#include <cmath>

#include "qtk/errors.hpp"

namespace qtk {

namespace {
constexpr int kBruteForceCap = 24;
}

IsingProblem::IsingProblem(int n, OptimizationSense sense) : n_(n), sense_(sense) {
  if (n < 1) throw ValidationError("IsingProblem needs at least one spin");
  j_.assign(static_cast<std::size_t>(n) * n, 0.0);
  h_.assign(n, 0.0);
}

std::size_t IsingProblem::idx(int i, int j) const {
  return static_cast<std::size_t>(i) * n_ + j;
}

double IsingProblem::coupling(int i, int j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  return j_[idx(i, j)];
}

void IsingProblem::set_coupling(int i, int j, double value) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw ValidationError("coupling indices out of range");
  if (i > j) std::swap(i, j);
  j_[idx(i, j)] = value;
}

double IsingProblem::energy(const std::vector<int>& spins) const {
  if (static_cast<int>(spins.size()) != n_) throw ValidationError("spin vector length mismatch");
  double e = offset_;
  for (int i = 0; i < n_; ++i) {
    e += h_[i] * spins[i];
    for (int j = i + 1; j < n_; ++j) e += j_[idx(i, j)] * spins[i] * spins[j];
  }
  return e;
}

double IsingProblem::energy_of_bits(std::uint64_t z) const {
  double e = offset_;
  for (int i = 0; i < n_; ++i) {
    const int si = ((z >> (n_ - 1 - i)) & 1u) ? -1 : +1;
    e += h_[i] * si;
    for (int j = i + 1; j < n_; ++j) {
      const int sj = ((z >> (n_ - 1 - j)) & 1u) ? -1 : +1;
      e += j_[idx(i, j)] * si * sj;
    }
  }
  return e;
}

std::vector<double> IsingProblem::energy_table() const {
  if (n_ > kBruteForceCap) throw CapExceeded("energy_table: too many spins");
  const std::uint64_t dim = std::uint64_t{1} << n_;
  std::vector<double> table(dim);
  // Gray-code walk: flipping one spin updates the energy in O(n).
  std::vector<int> spins(n_, +1);
  double e = energy(spins);
  std::uint64_t prev_gray = 0;
  table[0] = e;
  for (std::uint64_t i = 1; i < dim; ++i) {
    const std::uint64_t gray = i ^ (i >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    int bit = 0;
    while (!((changed >> bit) & 1u)) ++bit;
    const int q = n_ - 1 - bit;  // flipped qubit
    const int old_s = spins[q];
    double delta = -2.0 * h_[q] * old_s;
    for (int j = 0; j < n_; ++j) {
      if (j == q) continue;
      delta -= 2.0 * coupling(q, j) * old_s * spins[j];
    }
    spins[q] = -old_s;
    e += delta;
    table[gray] = e;
    prev_gray = gray;
  }
  return table;
}

QuboProblem::QuboProblem(int n) : n_(n) {
  if (n < 1) throw ValidationError("QuboProblem needs at least one variable");
  q_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

std::size_t QuboProblem::idx(int i, int j) const {
  return static_cast<std::size_t>(i) * n_ + j;
}

double QuboProblem::q(int i, int j) const {
  if (i > j) std::swap(i, j);
  return q_[idx(i, j)];
}

void QuboProblem::set_q(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ValidationError("Q indices out of range");
  if (i > j) std::swap(i, j);
  q_[idx(i, j)] = value;
}

double QuboProblem::value(std::uint64_t z) const {
  double v = constant_;
  for (int i = 0; i < n_; ++i) {
    const int zi = (z >> (n_ - 1 - i)) & 1u;
    if (!zi) continue;
    v += q_[idx(i, i)];
    for (int j = i + 1; j < n_; ++j) {
      const int zj = (z >> (n_ - 1 - j)) & 1u;
      if (zj) v += q_[idx(i, j)];
    }
  }
  return v;
}

IsingProblem encode_subset_sum(const std::vector<long long>& nums, long long m) {
  if (nums.empty()) throw ValidationError("encode_subset_sum: empty set");
  const int n = static_cast<int>(nums.size());
  IsingProblem p(n, OptimizationSense::kMinimize);
  double total = 0.0;
  double sum_sq = 0.0;
  for (const long long v : nums) {
    total += static_cast<double>(v);
    sum_sq += static_cast<double>(v) * static_cast<double>(v);
  }
  const double c = total / 2.0 - static_cast<double>(m);
  for (int i = 0; i < n; ++i) {
    p.set_field(i, -c * static_cast<double>(nums[i]));
    for (int j = i + 1; j < n; ++j)
      p.set_coupling(i, j, static_cast<double>(nums[i]) * static_cast<double>(nums[j]) / 2.0);
  }
  p.set_offset(c * c + sum_sq / 4.0);
  return p;
}

IsingProblem encode_number_partition(const std::vector<long long>& nums) {
  if (nums.empty()) throw ValidationError("encode_number_partition: empty set");
  for (const long long v : nums)
    if (v <= 0) throw ValidationError("encode_number_partition: integers must be positive");
  const int n = static_cast<int>(nums.size());
  IsingProblem p(n, OptimizationSense::kMinimize);
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    sum_sq += static_cast<double>(nums[i]) * static_cast<double>(nums[i]);
    for (int j = i + 1; j < n; ++j)
      p.set_coupling(i, j, 2.0 * static_cast<double>(nums[i]) * static_cast<double>(nums[j]));
  }
  p.set_offset(sum_sq);
  return p;
}

IsingProblem encode_maxcut(int num_vertices, const std::vector<WeightedEdge>& edges) {
  if (num_vertices < 1) throw ValidationError("encode_maxcut: need at least one vertex");
  IsingProblem p(num_vertices, OptimizationSense::kMaximize);
  double total = 0.0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices || e.u == e.v)
      throw ValidationError("encode_maxcut: bad edge");
    if (e.weight < 0.0) throw ValidationError("encode_maxcut: negative weight");
    // cut = sum w/2 (1 - s_i s_j)
    p.set_coupling(e.u, e.v, p.coupling(e.u, e.v) - e.weight / 2.0);
    total += e.weight / 2.0;
  }
  p.set_offset(total);
  return p;
}

QuboProblem qubo_from_ising(const IsingProblem& p) {
  const int n = p.num_spins();
  QuboProblem q(n);
  // s = 1 - 2z: J s_i s_j -> 4J z_i z_j - 2J z_i - 2J z_j + J; h s -> -2h z + h.
  double constant = p.offset();
  for (int i = 0; i < n; ++i) {
    double linear = -2.0 * p.field(i);
    constant += p.field(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      linear -= 2.0 * p.coupling(i, j);
    }
    q.set_q(i, i, linear);
    for (int j = i + 1; j < n; ++j) {
      q.set_q(i, j, 4.0 * p.coupling(i, j));
      constant += p.coupling(i, j);
    }
  }
  q.set_constant(constant);
  return q;
}

IsingProblem ising_from_qubo(const QuboProblem& q, OptimizationSense sense) {
  const int n = q.num_vars();
  IsingProblem p(n, sense);
  // z = (1 - s)/2: Q_ij z_i z_j -> Q/4 (1 - s_i - s_j + s_i s_j); Q_ii z -> Q/2 (1 - s).
  double offset = q.constant();
  for (int i = 0; i < n; ++i) {
    double field = -q.q(i, i) / 2.0;
    offset += q.q(i, i) / 2.0;
    for (int j = i + 1; j < n; ++j) {
      p.set_coupling(i, j, q.q(i, j) / 4.0);
      offset += q.q(i, j) / 4.0;
      field -= q.q(i, j) / 4.0;
    }
    for (int j = 0; j < i; ++j) field -= q.q(j, i) / 4.0;
    p.set_field(i, field);
  }
  p.set_offset(offset);
  return p;
}

GroundResult brute_force_ground(const IsingProblem& p) {
  if (p.num_spins() > kBruteForceCap) throw CapExceeded("brute_force_ground: too many spins");
  const std::vector<double> table = p.energy_table();
  const bool maximize = p.sense() == OptimizationSense::kMaximize;
  GroundResult result;
  result.optimal_energy = table[0];
  for (std::uint64_t z = 1; z < table.size(); ++z) {
    const bool better = maximize ? table[z] > result.optimal_energy + 1e-12
                                 : table[z] < result.optimal_energy - 1e-12;
    if (better) result.optimal_energy = table[z];
  }
  for (std::uint64_t z = 0; z < table.size(); ++z)
    if (std::abs(table[z] - result.optimal_energy) <= 1e-9) result.optimizers.push_back(z);
  return result;
}

std::string bits_to_string(std::uint64_t z, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((z >> (n - 1 - i)) & 1u) s[i] = '1';
  return s;
}

}  // namespace qtk
