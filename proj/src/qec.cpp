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

#include "qtk/qec.hpp"

#include <cmath>

#include "qtk/errors.hpp"
#include "qtk/gates.hpp"

namespace qtk {

StabilizerCode::StabilizerCode(std::string name, int n, int k, int d,
                               std::vector<PauliString> generators, PauliString logical_x,
                               PauliString logical_z, Circuit encoder)
    : name_(std::move(name)),
      n_(n),
      k_(k),
      d_(d),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)),
      encoder_(std::move(encoder)) {
  if (static_cast<int>(generators_.size()) != n_ - k_)
    throw ValidationError("stabilizer code needs n - k generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].num_qubits() != n_ || !generators_[i].is_hermitian())
      throw ValidationError("generator is not a Hermitian n-qubit string");
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!pauli_commutes(generators_[i], generators_[j]))
        throw ValidationError("generators must mutually commute");
  }
  if (pauli_commutes(logical_x_, logical_z_))
    throw ValidationError("logical X and Z must anticommute");
  for (const auto& g : generators_) {
    if (!pauli_commutes(logical_x_, g) || !pauli_commutes(logical_z_, g))
      throw ValidationError("logical operators must commute with the stabilizer");
  }
  encoder_.validate();
}

void StabilizerCode::add_decoder_entry(const std::vector<int>& syndrome,
                                       const PauliString& correction) {
  if (static_cast<int>(syndrome.size()) != n_ - k_)
    throw ValidationError("syndrome length must equal the generator count");
  decoder_.emplace(syndrome, correction);
}

std::vector<int> StabilizerCode::syndrome_of(const PauliString& error) const {
  std::vector<int> syn;
  syn.reserve(generators_.size());
  for (const auto& g : generators_) syn.push_back(pauli_commutes(error, g) ? +1 : -1);
  return syn;
}

bool StabilizerCode::has_correction(const std::vector<int>& syndrome) const {
  return decoder_.count(syndrome) != 0;
}

const PauliString& StabilizerCode::lookup_correction(const std::vector<int>& syndrome) const {
  const auto it = decoder_.find(syndrome);
  if (it == decoder_.end())
    throw ValidationError("unknown syndrome: error outside the code's guarantee");
  return it->second;
}

namespace {

// Decoder table from an explicit correctable-error list; errors are mapped to
// themselves, earlier entries winning syndrome collisions.
void fill_decoder(StabilizerCode& code, const std::vector<PauliString>& errors) {
  for (const auto& e : errors) {
    const auto syn = code.syndrome_of(e);
    if (!code.has_correction(syn)) code.add_decoder_entry(syn, e);
  }
}

}  // namespace

StabilizerCode StabilizerCode::bit_flip() {
  Circuit enc{3, {}};
  enc.append("CNOT", {0, 1});
  enc.append("CNOT", {0, 2});
  StabilizerCode code("bitflip", 3, 1, 1,
                      {PauliString::from_label("ZZI"), PauliString::from_label("IZZ")},
                      PauliString::from_label("XXX"), PauliString::from_label("ZZZ"),
                      std::move(enc));
  std::vector<PauliString> errors = {PauliString::identity(3)};
  for (int q = 0; q < 3; ++q) errors.push_back(PauliString::single(3, q, 'X'));
  fill_decoder(code, errors);
  return code;
}

StabilizerCode StabilizerCode::phase_flip() {
  Circuit enc{3, {}};
  enc.append("CNOT", {0, 1});
  enc.append("CNOT", {0, 2});
  enc.append("H", {0});
  enc.append("H", {1});
  enc.append("H", {2});
  StabilizerCode code("phaseflip", 3, 1, 1,
                      {PauliString::from_label("XXI"), PauliString::from_label("IXX")},
                      PauliString::from_label("ZZZ"), PauliString::from_label("XXX"),
                      std::move(enc));
  std::vector<PauliString> errors = {PauliString::identity(3)};
  for (int q = 0; q < 3; ++q) errors.push_back(PauliString::single(3, q, 'Z'));
  fill_decoder(code, errors);
  return code;
}

StabilizerCode StabilizerCode::shor_nine() {
  Circuit enc{9, {}};
  enc.append("CNOT", {0, 3});
  enc.append("CNOT", {0, 6});
  enc.append("H", {0});
  enc.append("H", {3});
  enc.append("H", {6});
  for (int block = 0; block < 3; ++block) {
    enc.append("CNOT", {3 * block, 3 * block + 1});
    enc.append("CNOT", {3 * block, 3 * block + 2});
  }

  std::vector<PauliString> gens;
  for (int block = 0; block < 3; ++block) {
    for (int pair = 0; pair < 2; ++pair) {
      PauliString g(9);
      g.set_z(3 * block + pair, true);
      g.set_z(3 * block + pair + 1, true);
      gens.push_back(g);
    }
  }
  PauliString x6(9), x69(9);
  for (int q = 0; q < 6; ++q) x6.set_x(q, true);
  for (int q = 3; q < 9; ++q) x69.set_x(q, true);
  gens.push_back(x6);
  gens.push_back(x69);

  // Logical Z is X^(x)9 (equivalently X1X2X3 modulo the stabilizer); logical
  // X is Z^(x)9 ~ Z1Z4Z7.
  PauliString logical_z(9), logical_x(9);
  for (int q = 0; q < 9; ++q) logical_z.set_x(q, true);
  logical_x.set_z(0, true);
  logical_x.set_z(3, true);
  logical_x.set_z(6, true);

  StabilizerCode code("shor9", 9, 1, 3, std::move(gens), std::move(logical_x),
                      std::move(logical_z), std::move(enc));

  // Structural decoder covering every syndrome: the two ZZ bits per block
  // locate a bit flip, the two X-stabilizer bits flag a block phase flip
  // corrected by that block's ZZZ.
  for (int syn_bits = 0; syn_bits < 256; ++syn_bits) {
    std::vector<int> syn(8, +1);
    for (int b = 0; b < 8; ++b)
      if ((syn_bits >> b) & 1) syn[b] = -1;
    PauliString corr(9);
    for (int block = 0; block < 3; ++block) {
      const int s01 = syn[2 * block], s12 = syn[2 * block + 1];
      int flip = -1;
      if (s01 < 0 && s12 > 0) flip = 3 * block;
      if (s01 < 0 && s12 < 0) flip = 3 * block + 1;
      if (s01 > 0 && s12 < 0) flip = 3 * block + 2;
      if (flip >= 0) corr.set_x(flip, true);
    }
    const int sx1 = syn[6], sx2 = syn[7];
    int phase_block = -1;
    if (sx1 < 0 && sx2 > 0) phase_block = 0;
    if (sx1 < 0 && sx2 < 0) phase_block = 1;
    if (sx1 > 0 && sx2 < 0) phase_block = 2;
    if (phase_block >= 0)
      for (int q = 0; q < 3; ++q) corr.set_z(3 * phase_block + q, true);
    code.add_decoder_entry(syn, corr);
  }
  return code;
}

QState encode(const StabilizerCode& code, cdouble alpha, cdouble beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-9)
    throw ValidationError("encode: input amplitudes are not normalized");
  QState state(code.n(), std::vector<cdouble>(std::uint64_t{1} << code.n(), cdouble{0, 0}));
  auto& amps = state.amplitudes();
  amps[0] = alpha;
  amps[std::uint64_t{1} << (code.n() - 1)] = beta;  // |1 0...0>
  return simulate(code.encoder(), state);
}

std::pair<std::vector<int>, QState> syndrome_extract(const StabilizerCode& code,
                                                     const QState& state, Rng& rng) {
  if (state.num_qubits() != code.n()) throw ValidationError("syndrome_extract: size mismatch");
  std::vector<int> syndrome;
  syndrome.reserve(code.generators().size());
  QState current = state;
  for (const auto& g : code.generators()) {
    auto [sign, prob, post] = measure_pauli_observable(current, g, rng);
    syndrome.push_back(sign);
    current = std::move(post);
  }
  return {std::move(syndrome), std::move(current)};
}

const PauliString& recover(const StabilizerCode& code, const std::vector<int>& syndrome) {
  if (syndrome.size() != code.generators().size())
    throw ValidationError("recover: syndrome length mismatch");
  return code.lookup_correction(syndrome);
}

QState correct_cycle(const StabilizerCode& code, const QState& state, Rng& rng) {
  auto [syndrome, post] = syndrome_extract(code, state, rng);
  const PauliString& correction = recover(code, syndrome);
  return apply_pauli(post, correction);
}

PauliString sample_error(const PauliErrorModel& model, int n, Rng& rng) {
  if (model.p < 0.0 || model.p > 1.0) throw ValidationError("error probability out of range");
  PauliString e(n);
  for (int q = 0; q < n; ++q) {
    if (random_unit(rng) >= model.p) continue;
    switch (model.kind) {
      case ErrorKind::kBitFlip:
        e.set_x(q, true);
        break;
      case ErrorKind::kPhaseFlip:
        e.set_z(q, true);
        break;
      case ErrorKind::kDepolarizing: {
        const auto which = random_index(rng, 3);
        if (which != 1) e.set_x(q, true);  // X or Y
        if (which != 0) e.set_z(q, true);  // Z or Y
        break;
      }
    }
  }
  return e;
}

LogicalErrorRate logical_error_rate(const StabilizerCode& code, const PauliErrorModel& model,
                                    std::uint64_t trials, Rng& rng) {
  if (trials < 1) throw ValidationError("logical_error_rate: trials must be >= 1");
  // Fixed generic logical state: every logical Pauli moves it detectably.
  const QState encoded = encode(code, 0.6, cdouble{0, 0.8});
  LogicalErrorRate out;
  out.trials = trials;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const PauliString error = sample_error(model, code.n(), rng);
    QState corrupted = apply_pauli(encoded, error);
    const QState corrected = correct_cycle(code, corrupted, rng);
    if (fidelity(corrected, encoded) < 1.0 - 1e-6) ++out.failures;
  }
  out.rate = static_cast<double>(out.failures) / static_cast<double>(trials);
  out.stderr_ = std::sqrt(out.rate * (1.0 - out.rate) / static_cast<double>(trials));
  return out;
}

double bitflip_code_exact_failure(double p) { return 3 * p * p * (1 - p) + p * p * p; }

bool satisfies_error_correction_conditions(const StabilizerCode& code,
                                           const std::vector<PauliString>& errors) {
  // Enumerate the stabilizer group (2^(n-k) elements; small codes only).
  const auto& gens = code.generators();
  if (gens.size() > 20) throw CapExceeded("error-condition check: too many generators");
  std::vector<PauliString> group;
  group.reserve(std::size_t{1} << gens.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    PauliString g = PauliString::identity(code.n());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((mask >> i) & 1) g = g * gens[i];
    group.push_back(std::move(g));
  }
  for (const auto& ej : errors) {
    for (const auto& ek : errors) {
      const PauliString prod = ej.adjoint() * ek;
      bool anticommutes = false;
      for (const auto& g : gens) anticommutes |= !pauli_commutes(prod, g);
      if (anticommutes) continue;
      // Membership in S as a set: the scalar phase acts as a constant on the
      // code space and does not spoil correctability.
      bool in_group = false;
      for (const auto& g : group) in_group |= g.equal_up_to_phase(prod);
      if (!in_group) return false;
    }
  }
  return true;
}

}  // namespace qtk
