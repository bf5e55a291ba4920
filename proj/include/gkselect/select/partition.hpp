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

#include <cstdint>
#include <span>

#include "gkselect/common/types.hpp"

namespace gks::select {

struct PartitionCounts {
  std::uint64_t below = 0;
  std::uint64_t equal = 0;
  std::uint64_t above = 0;

  std::uint64_t total() const noexcept { return below + equal + above; }

  PartitionCounts& operator+=(const PartitionCounts& o) noexcept {
    below += o.below;
    equal += o.equal;
    above += o.above;
    return *this;
  }
  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

// A segment reordered as [< pivot | == pivot | > pivot] together with the
// sizes of the three bands.
struct PartitionedSegment {
  Value pivot = 0;
  Segment values;
  PartitionCounts counts;

  std::span<const Value> below() const noexcept {
    return std::span<const Value>(values).first(counts.below);
  }
  std::span<const Value> equal() const noexcept {
    return std::span<const Value>(values).subspan(counts.below, counts.equal);
  }
  std::span<const Value> above() const noexcept {
    return std::span<const Value>(values).last(counts.above);
  }
  std::size_t payload_size() const noexcept { return values.size(); }
};

// Three-way partition into a fresh segment; the input is left untouched.
// Counts one comparison per `<` or `>` test when `comparisons` is set.
PartitionedSegment hoare_partition(std::span<const Value> segment, Value pivot,
                                   std::uint64_t* comparisons = nullptr);

// In-place three-way partition of `values`. Returns the [lt, gt) bounds of
// the band equal to pivot.
std::pair<std::size_t, std::size_t> partition_three_way(
    std::span<Value> values, Value pivot, std::uint64_t* comparisons = nullptr);

}  // namespace gks::select
