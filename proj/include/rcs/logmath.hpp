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

#include <algorithm>
#include <cmath>
#include <limits>

namespace rcs {

/// log2(2^a + 2^b) without leaving the log domain.
inline double log2_add(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (std::isinf(hi)) return hi;
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

/// 2^x, saturating to +inf instead of signalling.
inline double exp2_saturating(double x) {
  if (x >= 1024.0) return std::numeric_limits<double>::infinity();
  return std::exp2(x);
}

}  // namespace rcs
