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

#include "rcs/sfa.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "rcs/errors.hpp"
#include "rcs/random.hpp"

namespace rcs {

PathIndex path_from_ordinal(const PatchDecomposition& decomp, std::uint64_t ordinal) {
  if (ordinal >= decomp.path_count()) throw std::out_of_range("path ordinal out of range");
  PathIndex path;
  path.digits.reserve(decomp.cross_gates().size());
  for (const CrossGate& x : decomp.cross_gates()) {
    path.digits.push_back(static_cast<std::uint32_t>(ordinal % x.rank));
    ordinal /= x.rank;
  }
  return path;
}

std::uint64_t path_ordinal(const PatchDecomposition& decomp, const PathIndex& path) {
  const auto& cross = decomp.cross_gates();
  if (path.digits.size() != cross.size()) throw std::invalid_argument("path has wrong number of digits");
  std::uint64_t ordinal = 0;
  for (std::size_t i = cross.size(); i-- > 0;) {
    if (path.digits[i] >= cross[i].rank) throw std::invalid_argument("path digit exceeds Schmidt rank");
    ordinal = ordinal * cross[i].rank + path.digits[i];
  }
  return ordinal;
}

PathResult simulate_path(const PatchDecomposition& decomp, const PathIndex& path, const SimulationOptions& options) {
  const auto& cross = decomp.cross_gates();
  if (path.digits.size() != cross.size()) throw std::invalid_argument("path has wrong number of digits");
  const std::uint32_t p = decomp.num_patches();
  for (std::uint32_t k = 0; k < p; ++k) {
    if (decomp.patch_qubits(k).size() > options.max_qubits) {
      throw ResourceError("patch " + std::to_string(k) + " has " + std::to_string(decomp.patch_qubits(k).size()) +
                          " qubits, over the cap of " + std::to_string(options.max_qubits));
    }
  }

  PathResult result;
  result.patches.reserve(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    result.patches.emplace_back(static_cast<std::uint32_t>(decomp.patch_qubits(k).size()));
  }

  const std::uint32_t depth = decomp.circuit().depth();
  std::vector<std::size_t> cursor(p, 0);
  std::size_t next_cross = 0;
  for (std::uint32_t c = 0; c < depth; ++c) {
    for (std::uint32_t k = 0; k < p; ++k) {
      const auto& gates = decomp.internal_gates(k);
      StateVector& state = result.patches[k];
      for (; cursor[k] < gates.size() && gates[cursor[k]].cycle == c; ++cursor[k]) {
        const Gate& g = gates[cursor[k]].gate;
        if (g.arity() == 1) {
          state.apply_single(g.matrix2(), decomp.local_index(g.targets[0]));
        } else {
          state.apply_two(g.matrix4(), decomp.local_index(g.targets[0]), decomp.local_index(g.targets[1]));
        }
      }
    }
    // Cross gates of this cycle commute with the internal two-qubit gates of
    // the same layer, so applying them last is exact.
    for (; next_cross < cross.size() && cross[next_cross].cycle == c; ++next_cross) {
      const CrossGate& x = cross[next_cross];
      if (path.digits[next_cross] >= x.rank) throw std::invalid_argument("path digit exceeds Schmidt rank");
      const SchmidtTerm& term = x.terms[path.digits[next_cross]];
      result.patches[x.left_patch].apply_single(term.left, decomp.local_index(x.left_qubit));
      result.patches[x.left_patch + 1].apply_single(term.right, decomp.local_index(x.right_qubit));
      result.weight *= term.weight;
    }
  }
  return result;
}

std::vector<std::uint64_t> select_paths(const PatchDecomposition& decomp, const PathSelection& selection) {
  const std::uint64_t total = decomp.path_count();
  if (total == std::numeric_limits<std::uint64_t>::max()) throw ResourceError("path count overflows 64 bits");
  std::vector<std::uint64_t> out;
  if (selection.all) {
    out.resize(total);
    for (std::uint64_t i = 0; i < total; ++i) out[i] = i;
    return out;
  }
  if (!(selection.fraction > 0.0 && selection.fraction <= 1.0)) {
    throw std::invalid_argument("path fraction must lie in (0, 1]");
  }
  const auto k = static_cast<std::uint64_t>(std::llround(selection.fraction * static_cast<double>(total)));
  if (k == 0) throw std::invalid_argument("path subset is empty");
  if (k == total) return select_paths(decomp, PathSelection::all_paths());
  // Floyd's algorithm: k distinct values from [0, total).
  Rng rng(selection.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k);
  for (std::uint64_t j = total - k; j < total; ++j) {
    const std::uint64_t t = uniform_index(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  out.assign(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Local basis index of bitstring x within each patch.
std::vector<std::vector<std::uint64_t>> local_indices(const PatchDecomposition& decomp,
                                                      std::span<const std::uint64_t> bitstrings) {
  const std::uint32_t p = decomp.num_patches();
  const std::uint32_t n = decomp.circuit().num_qubits();
  std::vector<std::vector<std::uint64_t>> out(p, std::vector<std::uint64_t>(bitstrings.size()));
  for (std::size_t i = 0; i < bitstrings.size(); ++i) {
    const std::uint64_t x = bitstrings[i];
    if (n < 64 && (x >> n) != 0) throw std::invalid_argument("bitstring has bits beyond the qubit count");
    for (Qubit q = 0; q < n; ++q) {
      if ((x >> q) & 1U) out[decomp.patch_of(q)][i] |= std::uint64_t{1} << decomp.local_index(q);
    }
  }
  return out;
}

void accumulate_paths(const PatchDecomposition& decomp, const std::vector<std::vector<std::uint64_t>>& locals,
                      std::span<const std::uint64_t> ordinals, const SimulationOptions& sim,
                      std::vector<cplx>& acc) {
  const std::uint32_t p = decomp.num_patches();
  for (std::uint64_t ordinal : ordinals) {
    const PathResult r = simulate_path(decomp, path_from_ordinal(decomp, ordinal), sim);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      cplx a = r.weight;
      for (std::uint32_t k = 0; k < p; ++k) a *= r.patches[k].amplitudes()[locals[k][i]];
      acc[i] += a;
    }
  }
}

}  // namespace

std::vector<cplx> sfa_amplitudes_for_paths(const PatchDecomposition& decomp,
                                           std::span<const std::uint64_t> bitstrings,
                                           std::span<const std::uint64_t> path_ordinals, const SfaOptions& options,
                                           SfaStats* stats) {
  if (path_ordinals.empty()) throw std::invalid_argument("path subset is empty");
  const auto locals = local_indices(decomp, bitstrings);
  const SimulationOptions sim{options.max_patch_qubits};
  std::vector<cplx> out(bitstrings.size());

  const std::size_t peak_before = amplitude_counter::live();
  amplitude_counter::reset_peak();
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(path_ordinals.size())));
  if (threads == 1) {
    accumulate_paths(decomp, locals, path_ordinals, sim, out);
  } else {
    std::vector<std::vector<cplx>> partial(threads, std::vector<cplx>(bitstrings.size()));
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (path_ordinals.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(path_ordinals.size(), t * chunk);
      const std::size_t hi = std::min(path_ordinals.size(), lo + chunk);
      workers.emplace_back([&, t, lo, hi] {
        try {
          accumulate_paths(decomp, locals, path_ordinals.subspan(lo, hi - lo), sim, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& part : partial)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += part[i];
  }
  if (stats) {
    stats->paths_evaluated = path_ordinals.size();
    stats->peak_patch_amplitudes = amplitude_counter::peak() - peak_before;
  }
  return out;
}

std::vector<cplx> sfa_amplitudes(const PatchDecomposition& decomp, std::span<const std::uint64_t> bitstrings,
                                 const PathSelection& selection, const SfaOptions& options, SfaStats* stats) {
  const auto ordinals = select_paths(decomp, selection);
  return sfa_amplitudes_for_paths(decomp, bitstrings, ordinals, options, stats);
}

}  // namespace rcs
