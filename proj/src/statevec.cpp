// Copyright 2026 The rcsbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rcs/statevec.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rcs/errors.hpp"

namespace rcs {

namespace amplitude_counter {
namespace {
std::atomic<std::size_t> g_live{0};
std::atomic<std::size_t> g_peak{0};

void add(std::size_t count) {
  const std::size_t now = g_live.fetch_add(count) + count;
  std::size_t prev = g_peak.load();
  while (now > prev && !g_peak.compare_exchange_weak(prev, now)) {
  }
}

void remove(std::size_t count) { g_live.fetch_sub(count); }
}  // namespace

std::size_t live() { return g_live.load(); }
std::size_t peak() { return g_peak.load(); }
void reset_peak() { g_peak.store(g_live.load()); }
}  // namespace amplitude_counter

StateVector::StateVector(std::uint32_t num_qubits)
    : StateVector(std::vector<cplx>(std::size_t{1} << num_qubits), num_qubits) {
  amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<cplx> amplitudes, std::uint32_t num_qubits)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  amplitude_counter::add(amps_.size());
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  const auto n = static_cast<std::uint32_t>(std::countr_zero(amplitudes.size()));
  return StateVector(std::move(amplitudes), n);
}

StateVector::StateVector(const StateVector& other) : num_qubits_(other.num_qubits_), amps_(other.amps_) {
  amplitude_counter::add(amps_.size());
}

StateVector::StateVector(StateVector&& other) noexcept
    : num_qubits_(other.num_qubits_), amps_(std::move(other.amps_)) {
  other.amps_.clear();
}

StateVector& StateVector::operator=(const StateVector& other) {
  if (this != &other) {
    amplitude_counter::remove(amps_.size());
    num_qubits_ = other.num_qubits_;
    amps_ = other.amps_;
    amplitude_counter::add(amps_.size());
  }
  return *this;
}

StateVector& StateVector::operator=(StateVector&& other) noexcept {
  if (this != &other) {
    amplitude_counter::remove(amps_.size());
    num_qubits_ = other.num_qubits_;
    amps_ = std::move(other.amps_);
    other.amps_.clear();
  }
  return *this;
}

StateVector::~StateVector() { amplitude_counter::remove(amps_.size()); }

cplx StateVector::amplitude(std::uint64_t x) const {
  if (x >= amps_.size()) throw std::out_of_range("bitstring index out of range");
  return amps_[x];
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(), [](const cplx& a) { return std::norm(a); });
  return p;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::normalize() {
  const double s = norm_squared();
  if (!(s > 0.0)) throw NumericError("cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(s);
  for (cplx& a : amps_) a *= inv;
}

void StateVector::apply(const Gate& gate) {
  if (gate.arity() == 1) {
    apply_single(gate.matrix2(), gate.targets[0]);
  } else {
    apply_two(gate.matrix4(), gate.targets[0], gate.targets[1]);
  }
}

void StateVector::apply_single(const Matrix2& m, Qubit q) {
  if (q >= num_qubits_) throw std::out_of_range("gate target " + std::to_string(q) + " out of range");
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a0 = amps_[i];
      const cplx a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply_two(const Matrix4& m, Qubit q0, Qubit q1) {
  if (q0 >= num_qubits_ || q1 >= num_qubits_) throw std::out_of_range("gate target out of range");
  if (q0 == q1) throw std::invalid_argument("two-qubit gate needs distinct targets");
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (b0 | b1)) continue;
    const std::size_t idx[4] = {i, i | b1, i | b0, i | b0 | b1};
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += m[r * 4 + k] * in[k];
      amps_[idx[r]] = s;
    }
  }
}

StateVector simulate(const Circuit& circuit, const SimulationOptions& options) {
  if (circuit.num_qubits() > options.max_qubits) {
    throw ResourceError("state vector for " + std::to_string(circuit.num_qubits()) +
                        " qubits exceeds the cap of " + std::to_string(options.max_qubits));
  }
  StateVector state(circuit.num_qubits());
  for (const Cycle& cyc : circuit.cycles()) {
    for (const Gate& g : cyc.single_layer) state.apply(g);
    for (const Gate& g : cyc.two_qubit_layer) state.apply(g);
  }
  return state;
}

Sampler::Sampler(const StateVector& state) : Sampler(state.probabilities()) {}

Sampler::Sampler(std::span<const double> probabilities) : cdf_(probabilities.size()) {
  if (probabilities.empty()) throw std::invalid_argument("sampler needs a nonempty distribution");
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    cdf_[i] = acc;
  }
  if (!(acc > 0.0)) throw std::invalid_argument("sampler needs positive total probability");
}

std::uint64_t Sampler::draw(Rng& rng) const {
  const double target = uniform_unit(rng) * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
  if (it == cdf_.end()) {
    // Rounding pushed target to the total; fall back to the last nonzero bin.
    it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
  }
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::vector<std::uint64_t> sample(const StateVector& state, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sample count must be positive");
  const Sampler sampler(state);
  Rng rng(seed);
  std::vector<std::uint64_t> out(count);
  for (auto& x : out) x = sampler.draw(rng);
  return out;
}

namespace {

template <typename T>
void put_le(std::ostream& out, T value) {
  auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  out.write(reinterpret_cast<const char*>(bits.data()), bits.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bits{};
  if (!in.read(reinterpret_cast<char*>(bits.data()), bits.size())) {
    throw FormatError("amplitude dump truncated");
  }
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  return std::bit_cast<T>(bits);
}

}  // namespace

void write_amplitudes(std::ostream& out, const StateVector& state) {
  put_le<std::uint64_t>(out, state.num_qubits());
  for (const cplx& a : state.amplitudes()) {
    put_le<double>(out, a.real());
    put_le<double>(out, a.imag());
  }
}

StateVector read_amplitudes(std::istream& in) {
  const auto n = get_le<std::uint64_t>(in);
  if (n > 40) throw FormatError("amplitude dump header claims " + std::to_string(n) + " qubits");
  std::vector<cplx> amps(std::size_t{1} << n);
  for (cplx& a : amps) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    a = {re, im};
  }
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace rcs
