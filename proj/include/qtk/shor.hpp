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
#include <optional>
#include <string>
#include <vector>

#include "qtk/rng.hpp"
#include "qtk/state.hpp"

namespace qtk {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// x^e mod N by square-and-multiply.
std::uint64_t mod_pow(std::uint64_t x, std::uint64_t e, std::uint64_t n);

/// Modular inverse via extended Euclid; empty when gcd(x, N) > 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t x, std::uint64_t n);

/// Smallest r >= 1 with x^r = 1 mod N, by brute-force scan (desk-scale oracle).
std::uint64_t classical_order(std::uint64_t x, std::uint64_t n);

/// Scans the convergents of k/Q in order and returns the first denominator
/// r with 2 <= r < N; empty when no convergent qualifies (k = 0 in particular).
std::optional<std::uint64_t> continued_fraction_r(std::uint64_t k, std::uint64_t q,
                                                  std::uint64_t n);

/// One run of the quantum order-finding subroutine.
struct OrderFindingRun {
  std::uint64_t x = 0;
  std::uint64_t modulus = 0;
  int t = 0;                          // counting qubits
  int work_qubits = 0;                // L = ceil(log2 N)
  std::vector<double> distribution;   // exact probability of each k in [0, 2^t)
  std::uint64_t outcome_k = 0;        // sampled measurement outcome
  std::optional<std::uint64_t> candidate_r;
};

/// Number of counting qubits from the 2L+1 rule, clamped to the register cap.
int default_counting_qubits(std::uint64_t n, int qubit_cap = kDefaultQubitCap);

/// Simulates phase estimation of the modular-multiplication permutation
/// U|y> = |x y mod N> with the work register prepared in |1>, computes the
/// exact outcome distribution, samples one k, and converts it through the
/// continued-fraction expansion.
OrderFindingRun quantum_order_finding(std::uint64_t x, std::uint64_t n, int t, Rng& rng);

/// Permutation y -> x*y mod N on [0, 2^L), identity for y >= N.
std::vector<std::uint64_t> modmul_permutation(std::uint64_t x, std::uint64_t n, int work_qubits);

struct FactorAttempt {
  std::uint64_t x = 0;
  std::optional<std::uint64_t> r;
  std::string branch;                 // which exit the attempt took
  std::optional<std::uint64_t> factor_found;
};

struct FactorResult {
  std::uint64_t n = 0;
  std::uint64_t factor_a = 0;
  std::uint64_t factor_b = 0;
  int attempts = 0;
  std::vector<FactorAttempt> transcript;
};

bool is_prime_u64(std::uint64_t n);

/// Returns a base a with n = a^b (b >= 2), or empty.
std::optional<std::uint64_t> perfect_power_base(std::uint64_t n);

/// The five-step factoring driver: even check, perfect-power check, random
/// coprime base (gcd shortcut), quantum order finding, gcd(x^{r/2} +/- 1, n).
/// Requires 4 <= n <= 1024 and n composite; throws AlgorithmFailure when the
/// attempt budget is exhausted.
FactorResult factor(std::uint64_t n, Rng& rng, int max_attempts = 10);

}  // namespace qtk
