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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rcs/circuit.hpp"
#include "rcs/random.hpp"

namespace rcs {

/// Dense double-precision state. Qubit q is bit q of the basis index, so
/// X on qubit 0 maps |0...0> to index 1.
class StateVector {
 public:
  /// |0...0> on num_qubits qubits.
  explicit StateVector(std::uint32_t num_qubits);
  /// Takes ownership of 2^n amplitudes; throws if the size is not a power of 2.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  StateVector(const StateVector& other);
  StateVector(StateVector&& other) noexcept;
  StateVector& operator=(const StateVector& other);
  StateVector& operator=(StateVector&& other) noexcept;
  ~StateVector();

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }

  cplx amplitude(std::uint64_t x) const;
  double probability(std::uint64_t x) const { return std::norm(amplitude(x)); }
  std::vector<double> probabilities() const;
  double norm_squared() const;

  /// Throws std::out_of_range for a target >= n.
  void apply(const Gate& gate);
  void apply_single(const Matrix2& m, Qubit q);
  /// m is indexed by 2 * bit(q0) + bit(q1).
  void apply_two(const Matrix4& m, Qubit q0, Qubit q1);

  /// Rescales to unit norm; throws NumericError for a zero vector.
  void normalize();

 private:
  explicit StateVector(std::vector<cplx> amplitudes, std::uint32_t num_qubits);

  std::uint32_t num_qubits_;
  std::vector<cplx> amps_;
};

/// Process-wide count of amplitudes held by live StateVectors, with a
/// resettable high-water mark. Used to check simulator memory bounds.
namespace amplitude_counter {
std::size_t live();
std::size_t peak();
void reset_peak();
}  // namespace amplitude_counter

struct SimulationOptions {
  std::uint32_t max_qubits = 26;
};

inline void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }

/// U|0>. Throws ResourceError when n exceeds options.max_qubits.
StateVector simulate(const Circuit& circuit, const SimulationOptions& options = {});

inline cplx amplitude(const StateVector& state, std::uint64_t x) { return state.amplitude(x); }

/// Inverse-CDF sampler over |a_x|^2. Each draw consumes exactly one value
/// from the engine.
class Sampler {
 public:
  explicit Sampler(const StateVector& state);
  explicit Sampler(std::span<const double> probabilities);
  std::uint64_t draw(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

std::vector<std::uint64_t> sample(const StateVector& state, std::size_t count, std::uint64_t seed);

/// Little-endian dump: uint64 n, then 2^n (real, imag) double pairs.
void write_amplitudes(std::ostream& out, const StateVector& state);
StateVector read_amplitudes(std::istream& in);

}  // namespace rcs
