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

#include "gkselect/select/partition.hpp"

#include <utility>

namespace gks::select {

std::pair<std::size_t, std::size_t> partition_three_way(
    std::span<Value> values, Value pivot, std::uint64_t* comparisons) {
  std::size_t lt = 0;
  std::size_t i = 0;
  std::size_t gt = values.size();
  std::uint64_t cmp = 0;
  while (i < gt) {
    const Value v = values[i];
    ++cmp;
    if (v < pivot) {
      std::swap(values[lt++], values[i++]);
      continue;
    }
    ++cmp;
    if (v > pivot) {
      std::swap(values[i], values[--gt]);
    } else {
      ++i;
    }
  }
  if (comparisons != nullptr) *comparisons += cmp;
  return {lt, gt};
}

PartitionedSegment hoare_partition(std::span<const Value> segment, Value pivot,
                                   std::uint64_t* comparisons) {
  PartitionedSegment out;
  out.pivot = pivot;
  out.values.assign(segment.begin(), segment.end());
  const auto [lt, gt] = partition_three_way(out.values, pivot, comparisons);
  out.counts.below = lt;
  out.counts.equal = gt - lt;
  out.counts.above = out.values.size() - gt;
  return out;
}

}  // namespace gks::select
