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

#include "gkselect/select/quickselect.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gkselect/common/error.hpp"
#include "gkselect/select/partition.hpp"
#include "gkselect/select/random.hpp"

namespace gks::select {
namespace {

constexpr std::size_t kSortCutoff = 16;

Value median_of_three(Value a, Value b, Value c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

void check_rank(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidRank,
                "rank " + std::to_string(k) + " outside [1, " +
                    std::to_string(n) + "]");
  }
}

}  // namespace

void select_in_place(std::span<Value> values, std::size_t k,
                     std::uint64_t seed, std::uint64_t* comparisons) {
  check_rank(k, values.size());
  SplitMix64 rng(seed);
  const std::size_t target = k - 1;
  std::size_t lo = 0;
  std::size_t hi = values.size();
  const std::size_t random_depth =
      2 * static_cast<std::size_t>(std::bit_width(values.size()));
  std::size_t depth = 0;

  while (hi - lo > kSortCutoff) {
    const std::size_t len = hi - lo;
    Value pivot;
    if (depth < random_depth) {
      pivot = values[lo + rng.below(len)];
    } else {
      pivot = median_of_three(values[lo], values[lo + len / 2], values[hi - 1]);
    }
    ++depth;
    const auto [lt, gt] =
        partition_three_way(values.subspan(lo, len), pivot, comparisons);
    if (target < lo + lt) {
      hi = lo + lt;
    } else if (target >= lo + gt) {
      lo += gt;
    } else {
      return;
    }
  }
  std::sort(values.begin() + static_cast<std::ptrdiff_t>(lo),
            values.begin() + static_cast<std::ptrdiff_t>(hi));
}

Value quickselect(std::span<const Value> segment, std::size_t k,
                  std::uint64_t seed, std::uint64_t* comparisons) {
  check_rank(k, segment.size());
  Segment scratch(segment.begin(), segment.end());
  select_in_place(scratch, k, seed, comparisons);
  return scratch[k - 1];
}

}  // namespace gks::select
