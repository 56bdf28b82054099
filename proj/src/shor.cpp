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

#include "qtk/shor.hpp"

#include <cmath>

#include "qtk/algorithms.hpp"
#include "qtk/circuit.hpp"
#include "qtk/errors.hpp"

namespace qtk {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_pow(std::uint64_t x, std::uint64_t e, std::uint64_t n) {
  if (n < 2) throw ValidationError("mod_pow: modulus must be >= 2");
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % n;
  std::uint64_t base = x % n;
  while (e > 0) {
    if (e & 1) result = static_cast<std::uint64_t>((u128)result * base % n);
    base = static_cast<std::uint64_t>((u128)base * base % n);
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t x, std::uint64_t n) {
  if (n < 2) throw ValidationError("mod_inverse: modulus must be >= 2");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(x % n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) return std::nullopt;  // not coprime
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t classical_order(std::uint64_t x, std::uint64_t n) {
  if (n < 2) throw ValidationError("classical_order: modulus must be >= 2");
  if (gcd_u64(x % n, n) != 1) throw ValidationError("classical_order: x and N are not coprime");
  using u128 = unsigned __int128;
  std::uint64_t acc = x % n;
  for (std::uint64_t r = 1; r <= n; ++r) {
    if (acc == 1) return r;
    acc = static_cast<std::uint64_t>((u128)acc * (x % n) % n);
  }
  throw std::logic_error("order not found below N");
}

std::optional<std::uint64_t> continued_fraction_r(std::uint64_t k, std::uint64_t q,
                                                  std::uint64_t n) {
  if (q == 0 || k >= q) throw ValidationError("continued_fraction_r requires 0 <= k < Q");
  if (k == 0) return std::nullopt;
  // Convergents p_i/q_i of k/q, denominators increasing. A convergent is a
  // credible s/r only when |k/q - p/q_i| <= 1/(2 q_i^2), the regime in which
  // the continued-fraction theorem pins the reduced fraction.
  std::uint64_t num = k, den = q;
  std::uint64_t p_prev = 1, p_curr = 0;  // p_{-1}, p_0 seeds for [0; a1, a2, ...]
  std::uint64_t q_prev = 0, q_curr = 1;
  const double target = static_cast<double>(k) / static_cast<double>(q);
  while (num != 0) {
    const std::uint64_t a = den / num;
    const std::uint64_t p_next = a * p_curr + p_prev;
    const std::uint64_t q_next = a * q_curr + q_prev;
    p_prev = p_curr;
    p_curr = p_next;
    q_prev = q_curr;
    q_curr = q_next;
    const std::uint64_t rem = den % num;
    den = num;
    num = rem;
    if (q_curr >= n) return std::nullopt;
    if (q_curr < 2) continue;
    const double approx = static_cast<double>(p_curr) / static_cast<double>(q_curr);
    const double bound = 0.5 / (static_cast<double>(q_curr) * static_cast<double>(q_curr));
    if (std::abs(target - approx) <= bound) return q_curr;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> modmul_permutation(std::uint64_t x, std::uint64_t n, int work_qubits) {
  using u128 = unsigned __int128;
  const std::uint64_t dim = std::uint64_t{1} << work_qubits;
  if (dim < n) throw ValidationError("work register too small for the modulus");
  std::vector<std::uint64_t> perm(dim);
  for (std::uint64_t y = 0; y < dim; ++y)
    perm[y] = y < n ? static_cast<std::uint64_t>((u128)x * y % n) : y;
  return perm;
}

int default_counting_qubits(std::uint64_t n, int qubit_cap) {
  const int work = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  return std::min(2 * work + 1, qubit_cap - work);
}

OrderFindingRun quantum_order_finding(std::uint64_t x, std::uint64_t n, int t, Rng& rng) {
  if (n < 2) throw ValidationError("quantum_order_finding: modulus must be >= 2");
  if (x < 2 || x >= n) throw ValidationError("quantum_order_finding requires 1 < x < N");
  if (gcd_u64(x, n) != 1) throw ValidationError("quantum_order_finding: x and N are not coprime");
  if (t < 2) throw ValidationError("quantum_order_finding requires t >= 2");
  const int work = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  if (t + work > kDefaultQubitCap)
    throw CapExceeded("quantum_order_finding: register exceeds the qubit cap");

  // Joint register: t counting qubits then L work qubits, |+>^t (x) |1>.
  const std::uint64_t count_dim = std::uint64_t{1} << t;
  const std::uint64_t work_dim = std::uint64_t{1} << work;
  std::vector<cdouble> amps(count_dim * work_dim, cdouble{0, 0});
  const double h = 1.0 / std::sqrt(static_cast<double>(count_dim));
  for (std::uint64_t k = 0; k < count_dim; ++k) amps[k * work_dim + 1] = h;
  QState state(t + work, std::move(amps));

  // Counting qubit j controls U^(2^(t-1-j)); permutation powers compose by
  // index chasing, and controlled application scatters each work block.
  std::vector<std::uint64_t> power = modmul_permutation(x, n, work);
  std::vector<cdouble> scratch(work_dim);
  for (int j = t - 1; j >= 0; --j) {
    auto& a = state.amplitudes();
    for (std::uint64_t k = 0; k < count_dim; ++k) {
      if (!((k >> (t - 1 - j)) & 1u)) continue;
      cdouble* block = a.data() + k * work_dim;
      for (std::uint64_t y = 0; y < work_dim; ++y) scratch[power[y]] = block[y];
      std::copy(scratch.begin(), scratch.end(), block);
    }
    if (j > 0) {
      std::vector<std::uint64_t> sq(work_dim);
      for (std::uint64_t y = 0; y < work_dim; ++y) sq[y] = power[power[y]];
      power.swap(sq);
    }
  }

  apply_circuit_inplace(state, qft_inverse_circuit(t));

  OrderFindingRun run;
  run.x = x;
  run.modulus = n;
  run.t = t;
  run.work_qubits = work;
  run.distribution.assign(count_dim, 0.0);
  for (std::uint64_t k = 0; k < count_dim; ++k) {
    double p = 0.0;
    for (std::uint64_t y = 0; y < work_dim; ++y) p += std::norm(state.amplitude(k * work_dim + y));
    run.distribution[k] = p;
  }
  run.outcome_k = random_discrete(rng, run.distribution);
  run.candidate_r = continued_fraction_r(run.outcome_k, count_dim, n);
  return run;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::uint64_t> perfect_power_base(std::uint64_t n) {
  if (n < 4) return std::nullopt;
  const int max_b = static_cast<int>(std::floor(std::log2(static_cast<double>(n))));
  for (int b = 2; b <= max_b; ++b) {
    const auto a_guess = static_cast<std::uint64_t>(std::llround(std::pow(n, 1.0 / b)));
    for (std::uint64_t a = a_guess > 1 ? a_guess - 1 : 2; a <= a_guess + 1; ++a) {
      if (a < 2) continue;
      std::uint64_t acc = 1;
      bool overflow = false;
      for (int i = 0; i < b; ++i) {
        if (acc > n / a + 1) {
          overflow = true;
          break;
        }
        acc *= a;
      }
      if (!overflow && acc == n) return a;
    }
  }
  return std::nullopt;
}

FactorResult factor(std::uint64_t n, Rng& rng, int max_attempts) {
  if (n < 4 || n > 1024) throw ValidationError("factor handles composite 4 <= n <= 1024");
  if (is_prime_u64(n)) throw ValidationError("factor: n is prime");

  FactorResult result;
  result.n = n;
  auto finish = [&](std::uint64_t f) {
    result.factor_a = std::min(f, n / f);
    result.factor_b = std::max(f, n / f);
    return result;
  };

  if (n % 2 == 0) {
    result.attempts = 0;
    result.transcript.push_back({0, std::nullopt, "even", 2});
    return finish(2);
  }
  if (const auto base = perfect_power_base(n)) {
    result.transcript.push_back({0, std::nullopt, "perfect-power", *base});
    return finish(*base);
  }

  const int t = default_counting_qubits(n);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    result.attempts = attempt;
    const std::uint64_t x = 2 + random_index(rng, n - 3);  // 1 < x < N-1
    const std::uint64_t g = gcd_u64(x, n);
    if (g != 1) {
      result.transcript.push_back({x, std::nullopt, "gcd-shortcut", g});
      return finish(g);
    }

    const OrderFindingRun run = quantum_order_finding(x, n, t, rng);
    if (!run.candidate_r) {
      result.transcript.push_back({x, std::nullopt, "no-candidate", std::nullopt});
      continue;
    }
    const std::uint64_t r = *run.candidate_r;
    if (mod_pow(x, r, n) != 1) {
      result.transcript.push_back({x, r, "verification-failed", std::nullopt});
      continue;
    }
    if (r % 2 != 0) {
      result.transcript.push_back({x, r, "odd-order", std::nullopt});
      continue;
    }
    const std::uint64_t y = mod_pow(x, r / 2, n);
    if (y == n - 1) {
      result.transcript.push_back({x, r, "trivial-root", std::nullopt});
      continue;
    }
    for (const std::uint64_t f : {gcd_u64(y + 1, n), gcd_u64(y >= 1 ? y - 1 : 0, n)}) {
      if (f > 1 && f < n) {
        result.transcript.push_back({x, r, "gcd-split", f});
        return finish(f);
      }
    }
    result.transcript.push_back({x, r, "gcd-trivial", std::nullopt});
  }
  throw AlgorithmFailure("factor: attempt budget exhausted for n = " + std::to_string(n));
}

}  // namespace qtk
