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

#include "qtk/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"
#include "qtk/mbqc.hpp"

namespace qtk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string index_to_bits(std::uint64_t z, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((z >> (n - 1 - i)) & 1u) s[i] = '1';
  return s;
}

}  // namespace

cdouble permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw ValidationError("permanent: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 20) throw CapExceeded("permanent: matrices larger than 20x20 unsupported");

  // Ryser: Per(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} a_ij.
  // Gray-code order updates the row sums by one column per subset.
  std::vector<cdouble> row_sums(n, cdouble{0, 0});
  cdouble total{0, 0};
  std::uint64_t prev_gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t changed = gray ^ prev_gray;
    int col = 0;
    while (!((changed >> col) & 1u)) ++col;
    if (gray & changed) {
      for (int i = 0; i < n; ++i) row_sums[i] += a(i, col);
    } else {
      for (int i = 0; i < n; ++i) row_sums[i] -= a(i, col);
    }
    prev_gray = gray;
    cdouble prod{1, 0};
    for (int i = 0; i < n; ++i) prod *= row_sums[i];
    const int popcount = __builtin_popcountll(gray);
    total += (popcount % 2 ? -1.0 : 1.0) * prod;
  }
  return (n % 2 ? -1.0 : 1.0) * total;
}

cdouble permanent_naive(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw ValidationError("permanent: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n > 8) throw CapExceeded("permanent_naive: capped at 8x8");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  cdouble total{0, 0};
  do {
    cdouble prod{1, 0};
    for (int i = 0; i < n; ++i) prod *= a(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Interferometer::Interferometer(Eigen::MatrixXcd matrix) : u(std::move(matrix)) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw ValidationError("Interferometer: matrix must be square");
  const Eigen::MatrixXcd defect =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if (defect.cwiseAbs().maxCoeff() >= 1e-10)
    throw ValidationError("Interferometer: matrix is not unitary");
}

Interferometer random_interferometer(int modes, Rng& rng) {
  if (modes < 1) throw ValidationError("random_interferometer: modes must be >= 1");
  Eigen::MatrixXcd g(modes, modes);
  for (int r = 0; r < modes; ++r)
    for (int c = 0; c < modes; ++c) g(r, c) = cdouble{random_gaussian(rng), random_gaussian(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < modes; ++i) {
    const cdouble d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return Interferometer(std::move(q));
}

int FockConfig::total() const {
  int n = 0;
  for (const int o : occupations) n += o;
  return n;
}

void FockConfig::validate() const {
  if (occupations.empty()) throw ValidationError("FockConfig: no modes");
  for (const int o : occupations)
    if (o < 0) throw ValidationError("FockConfig: negative occupation");
}

std::vector<FockConfig> enumerate_fock_configs(int photons, int modes) {
  if (modes < 1 || photons < 0) throw ValidationError("enumerate_fock_configs: bad arguments");
  std::vector<FockConfig> out;
  FockConfig current;
  current.occupations.assign(modes, 0);
  // Lexicographic recursion over occupation tuples.
  std::function<void(int, int)> rec = [&](int mode, int remaining) {
    if (mode == modes - 1) {
      current.occupations[mode] = remaining;
      out.push_back(current);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      current.occupations[mode] = k;
      rec(mode + 1, remaining - k);
    }
  };
  rec(0, photons);
  return out;
}

double boson_prob(const Interferometer& u, const FockConfig& input, const FockConfig& output) {
  input.validate();
  output.validate();
  const int modes = u.modes();
  if (static_cast<int>(input.occupations.size()) != modes ||
      static_cast<int>(output.occupations.size()) != modes)
    throw ValidationError("boson_prob: mode count mismatch");
  for (const int o : input.occupations)
    if (o > 1) throw ValidationError("boson_prob: input must have at most one photon per mode");
  const int photons = input.total();
  if (photons != output.total()) throw ValidationError("boson_prob: photon numbers differ");
  if (photons == 0) return 1.0;

  // Rows are the occupied input modes; column i of U is repeated S_i times.
  Eigen::MatrixXcd sub(photons, photons);
  int col_index = 0;
  for (int mode = 0; mode < modes; ++mode) {
    for (int rep = 0; rep < output.occupations[mode]; ++rep) {
      int row_index = 0;
      for (int in_mode = 0; in_mode < modes; ++in_mode) {
        if (!input.occupations[in_mode]) continue;
        sub(row_index, col_index) = u.u(in_mode, mode);
        ++row_index;
      }
      ++col_index;
    }
  }

  // Factorials up to 20! precomputed once; photon counts beyond 10 switch to
  // log-space to keep the magnitudes tame.
  static const auto kFactorial = [] {
    std::array<double, 21> f{};
    f[0] = 1.0;
    for (int i = 1; i <= 20; ++i) f[i] = f[i - 1] * i;
    return f;
  }();
  const cdouble per = permanent(sub);
  if (photons > 10) {
    double log_p = 2.0 * std::log(std::abs(per));
    for (const int o : output.occupations) log_p -= std::log(kFactorial[o]);
    return std::exp(log_p);
  }
  double denom = 1.0;
  for (const int o : output.occupations) denom *= kFactorial[o];
  return std::norm(per) / denom;
}

BosonDistribution boson_distribution(const Interferometer& u, int photons, int modes) {
  if (modes != u.modes()) throw ValidationError("boson_distribution: mode count mismatch");
  if (photons < 0 || photons > modes)
    throw ValidationError("boson_distribution: standard input needs photons <= modes");
  // C(N+M-1, N) guard before enumeration.
  double count = 1.0;
  for (int i = 1; i <= photons; ++i)
    count *= static_cast<double>(modes - 1 + i) / static_cast<double>(i);
  if (count > 1e5) throw CapExceeded("boson_distribution: configuration space too large");

  FockConfig input;
  input.occupations.assign(modes, 0);
  for (int i = 0; i < photons; ++i) input.occupations[i] = 1;

  BosonDistribution dist;
  dist.configs = enumerate_fock_configs(photons, modes);
  dist.probabilities.reserve(dist.configs.size());
  for (const auto& cfg : dist.configs) dist.probabilities.push_back(boson_prob(u, input, cfg));
  return dist;
}

void IqpCircuit::validate() const {
  if (num_qubits < 1) throw ValidationError("IqpCircuit: needs at least one qubit");
  if (gateset != 1 && gateset != 2) throw ValidationError("IqpCircuit: gateset must be 1 or 2");
  for (const auto& op : ops) {
    std::size_t arity = 0;
    bool in_set = false;
    switch (op.kind) {
      case IqpGateKind::kSqrtCZ: arity = 2; in_set = gateset == 1; break;
      case IqpGateKind::kTPower: arity = 1; in_set = gateset == 1; break;
      case IqpGateKind::kZ: arity = 1; in_set = gateset == 2; break;
      case IqpGateKind::kCZ: arity = 2; in_set = gateset == 2; break;
      case IqpGateKind::kCCZ: arity = 3; in_set = gateset == 2; break;
    }
    if (!in_set) throw ValidationError("IqpCircuit: gate outside the declared set");
    if (op.targets.size() != arity) throw ValidationError("IqpCircuit: wrong target count");
    for (std::size_t i = 0; i < op.targets.size(); ++i) {
      if (op.targets[i] < 0 || op.targets[i] >= num_qubits)
        throw ValidationError("IqpCircuit: target out of range");
      for (std::size_t j = i + 1; j < op.targets.size(); ++j)
        if (op.targets[i] == op.targets[j]) throw ValidationError("IqpCircuit: duplicate targets");
    }
  }
}

IqpCircuit iqp_random(int n, int gateset, int depth, Rng& rng) {
  if (n < 1) throw ValidationError("iqp_random: n must be >= 1");
  if (gateset != 1 && gateset != 2) throw ValidationError("iqp_random: gateset must be 1 or 2");
  if (depth < 0) throw ValidationError("iqp_random: negative depth");
  IqpCircuit c;
  c.num_qubits = n;
  c.gateset = gateset;

  auto pick_targets = [&](int arity) {
    std::vector<int> targets;
    while (static_cast<int>(targets.size()) < arity) {
      const int t = static_cast<int>(random_index(rng, n));
      bool seen = false;
      for (const int u : targets) seen |= (u == t);
      if (!seen) targets.push_back(t);
    }
    return targets;
  };

  for (int i = 0; i < depth; ++i) {
    IqpOp op;
    if (gateset == 1) {
      // sqrt(CZ) needs two qubits; single-qubit registers only get T powers.
      const bool two_qubit = n >= 2 && random_bit(rng);
      if (two_qubit) {
        op.kind = IqpGateKind::kSqrtCZ;
        op.targets = pick_targets(2);
      } else {
        op.kind = IqpGateKind::kTPower;
        op.targets = pick_targets(1);
        op.power = 1 + static_cast<int>(random_index(rng, 7));
      }
    } else {
      const int max_kind = n >= 3 ? 3 : (n >= 2 ? 2 : 1);
      const auto which = random_index(rng, max_kind);
      if (which == 0) {
        op.kind = IqpGateKind::kZ;
        op.targets = pick_targets(1);
      } else if (which == 1) {
        op.kind = IqpGateKind::kCZ;
        op.targets = pick_targets(2);
      } else {
        op.kind = IqpGateKind::kCCZ;
        op.targets = pick_targets(3);
      }
    }
    c.ops.push_back(std::move(op));
  }
  c.validate();
  return c;
}

IqpSampleResult iqp_sample(const IqpCircuit& circuit, std::uint64_t shots, Rng& rng) {
  circuit.validate();
  const int n = circuit.num_qubits;
  if (n > kDefaultQubitCap) throw CapExceeded("iqp_sample: register exceeds the qubit cap");
  QState state = QState::plus_state(n);

  auto& amps = state.amplitudes();
  for (const auto& op : circuit.ops) {
    // All gates are diagonal phase masks.
    switch (op.kind) {
      case IqpGateKind::kSqrtCZ: {
        const std::uint64_t mask = (std::uint64_t{1} << (n - 1 - op.targets[0])) |
                                   (std::uint64_t{1} << (n - 1 - op.targets[1]));
        for (std::uint64_t z = 0; z < amps.size(); ++z)
          if ((z & mask) == mask) amps[z] *= cdouble{0, 1};
        break;
      }
      case IqpGateKind::kTPower: {
        const std::uint64_t mask = std::uint64_t{1} << (n - 1 - op.targets[0]);
        const cdouble phase = std::exp(cdouble{0, kPi * op.power / 4.0});
        for (std::uint64_t z = 0; z < amps.size(); ++z)
          if (z & mask) amps[z] *= phase;
        break;
      }
      case IqpGateKind::kZ:
      case IqpGateKind::kCZ:
      case IqpGateKind::kCCZ: {
        std::uint64_t mask = 0;
        for (const int t : op.targets) mask |= std::uint64_t{1} << (n - 1 - t);
        for (std::uint64_t z = 0; z < amps.size(); ++z)
          if ((z & mask) == mask) amps[z] = -amps[z];
        break;
      }
    }
  }
  for (int q = 0; q < n; ++q) apply_gate_inplace(state, gates::H(), {q});

  IqpSampleResult result;
  result.distribution.resize(state.dim());
  for (std::uint64_t z = 0; z < state.dim(); ++z)
    result.distribution[z] = std::norm(state.amplitude(z));
  result.samples.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const std::uint64_t z = random_discrete(rng, result.distribution);
    result.samples.push_back(index_to_bits(z, n));
  }
  return result;
}

HadamardGadgetResult hadamard_gadget(const QState& psi, Rng& rng) {
  if (psi.num_qubits() != 1) throw ValidationError("hadamard_gadget expects a single qubit");
  ClusterGraph g{2, {{0, 1}}, 1};
  const QState cluster = build_cluster(g, psi);

  HadamardGadgetResult result{0.0, QState(1), QState(1), 0};
  const double r = 1.0 / std::sqrt(2.0);
  const cdouble plus_vec[2] = {r, r};
  const cdouble minus_vec[2] = {r, -r};
  auto [p_plus, post_plus] = measure_qubit_in_basis_forced(cluster, 0, plus_vec, minus_vec, 0);
  auto [p_minus, post_minus] = measure_qubit_in_basis_forced(cluster, 0, plus_vec, minus_vec, 1);
  result.p_plus = p_plus;
  result.plus_branch = remove_qubit(post_plus, 0, plus_vec);
  result.minus_branch = remove_qubit(post_minus, 0, minus_vec);
  result.sampled_outcome = random_unit(rng) < p_plus ? 0 : 1;
  return result;
}

}  // namespace qtk
