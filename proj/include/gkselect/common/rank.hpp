// Copyright 2026 The gkselect Authors
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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "gkselect/common/error.hpp"

namespace gks {

// 1-based lower quantile rank k = max(1, ceil(q * n)), clamped to n.
// q * n is snapped to the nearest integer when it lies within rounding noise
// of one, so that e.g. q = 0.07, n = 100 yields 7 and not 8.
inline std::uint64_t target_rank(double q, std::uint64_t n) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "quantile level must lie in [0, 1], got " + std::to_string(q));
  }
  if (n == 0) {
    throw Error(ErrorCode::kEmptyInput, "rank of an empty collection");
  }
  const long double t = static_cast<long double>(q) * static_cast<long double>(n);
  const long double nearest = std::round(t);
  const long double snapped =
      std::fabs(t - nearest) <= 1e-9L * std::max<long double>(1.0L, t) ? nearest
                                                                        : std::ceil(t);
  auto k = static_cast<std::uint64_t>(snapped);
  if (k < 1) k = 1;
  if (k > n) k = n;
  return k;
}

}  // namespace gks
