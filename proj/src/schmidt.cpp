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

#include "rcs/schmidt.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rcs {

namespace {

using Mat4 = Eigen::Matrix<cplx, 4, 4>;

// Reshuffle M[(a b), (a' b')] -> R[(a a'), (b b')] where a is the left qubit.
Mat4 reshuffle(const Matrix4& m, bool first_target_left) {
  Mat4 r;
  for (int i0 = 0; i0 < 2; ++i0)
    for (int i1 = 0; i1 < 2; ++i1)
      for (int j0 = 0; j0 < 2; ++j0)
        for (int j1 = 0; j1 < 2; ++j1) {
          const cplx v = m[(2 * i0 + i1) * 4 + (2 * j0 + j1)];
          if (first_target_left) {
            r(2 * i0 + j0, 2 * i1 + j1) = v;
          } else {
            r(2 * i1 + j1, 2 * i0 + j0) = v;
          }
        }
  return r;
}

Eigen::JacobiSVD<Mat4> svd_of(const Matrix4& m, bool first_target_left) {
  return Eigen::JacobiSVD<Mat4>(reshuffle(m, first_target_left), Eigen::ComputeFullU | Eigen::ComputeFullV);
}

// Built-in gates have degenerate singular values, so the SVD may return any
// orthonormal basis of a degenerate block. For CZ it tends to put projectors
// on one side, which makes a path subset look like a projection of the ideal
// state. These bases keep every factor proportional to a unitary:
//   CZ    = sqrt2 * sum_s (I + s iZ)/2 (x) diag(1, -s i)/sqrt2,  s = +-1
//   iSWAP = (II + iXX + iYY + ZZ) / 2
std::vector<SchmidtTerm> unitary_factor_terms(GateKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  switch (kind) {
    case GateKind::CZ:
      return {
          {{(1.0 + i) / 2.0, 0.0, 0.0, (1.0 - i) / 2.0}, {h, 0.0, 0.0, -i * h}, std::sqrt(2.0)},
          {{(1.0 - i) / 2.0, 0.0, 0.0, (1.0 + i) / 2.0}, {h, 0.0, 0.0, i * h}, std::sqrt(2.0)},
      };
    case GateKind::ISwap:
      return {
          {{h, 0.0, 0.0, h}, {h, 0.0, 0.0, h}, 1.0},
          {{0.0, i * h, i * h, 0.0}, {0.0, h, h, 0.0}, 1.0},
          {{0.0, h, -h, 0.0}, {0.0, h * -i, h * i, 0.0}, 1.0},
          {{h, 0.0, 0.0, -h}, {h, 0.0, 0.0, -h}, 1.0},
      };
    default:
      return {};
  }
}

}  // namespace

bool is_unitary(const Matrix4& m, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += std::conj(m[k * 4 + i]) * m[k * 4 + j];
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

std::vector<SchmidtTerm> schmidt_decompose(const Matrix4& m, bool first_target_left) {
  if (!is_unitary(m, 1e-10)) throw std::invalid_argument("schmidt_decompose: matrix is not unitary");
  const auto svd = svd_of(m, first_target_left);
  const auto& s = svd.singularValues();  // descending
  const Mat4& u = svd.matrixU();
  const Mat4& v = svd.matrixV();
  std::vector<SchmidtTerm> terms;
  for (int k = 0; k < 4; ++k) {
    if (s(k) < kSchmidtCutoff) break;
    SchmidtTerm t{};
    t.weight = s(k);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        t.left[2 * a + b] = u(2 * a + b, k);
        t.right[2 * a + b] = std::conj(v(2 * a + b, k));
      }
    terms.push_back(t);
  }
  return terms;
}

std::vector<SchmidtTerm> schmidt_decompose(const Gate& gate, bool first_target_left) {
  if (gate.arity() != 2) throw std::invalid_argument("schmidt_decompose: gate is not two-qubit");
  auto terms = unitary_factor_terms(gate.kind);
  if (terms.empty()) return schmidt_decompose(gate.matrix4(), first_target_left);
  if (!first_target_left) {
    for (SchmidtTerm& t : terms) std::swap(t.left, t.right);
  }
  return terms;
}

std::size_t schmidt_rank(const Matrix4& m) {
  const auto svd = svd_of(m, true);
  std::size_t rank = 0;
  for (int k = 0; k < 4; ++k) rank += svd.singularValues()(k) >= kSchmidtCutoff;
  return rank;
}

Matrix4 reconstruct(const std::vector<SchmidtTerm>& terms, bool first_target_left) {
  Matrix4 out{};
  for (const SchmidtTerm& t : terms)
    for (int i0 = 0; i0 < 2; ++i0)
      for (int i1 = 0; i1 < 2; ++i1)
        for (int j0 = 0; j0 < 2; ++j0)
          for (int j1 = 0; j1 < 2; ++j1) {
            // i0/j0 index targets[0], i1/j1 index targets[1].
            const cplx l = first_target_left ? t.left[2 * i0 + j0] : t.left[2 * i1 + j1];
            const cplx r = first_target_left ? t.right[2 * i1 + j1] : t.right[2 * i0 + j0];
            out[(2 * i0 + i1) * 4 + (2 * j0 + j1)] += t.weight * l * r;
          }
  return out;
}

}  // namespace rcs
