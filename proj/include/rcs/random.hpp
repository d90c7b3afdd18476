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

#include <cstdint>
#include <random>

namespace rcs {

/// All randomized components draw from 64-bit Mersenne Twister (mt19937_64).
/// The engine's output sequence is fixed by the C++ standard, and every
/// conversion to indices or reals below is done by hand, so a seed produces
/// the same stream on every conforming platform.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Seed for an independent stream `stream` derived from a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Uniform integer in [0, bound). Unbiased (rejection sampling). bound > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

}  // namespace rcs
