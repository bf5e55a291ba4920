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

#include <cstddef>
#include <cstdint>
#include <span>

#include "gkselect/common/types.hpp"
#include "gkselect/select/partition.hpp"

namespace gks::select {

enum class CandidateSide {
  kAboveOrEqual,  // the m smallest values >= pivot
  kAbove,         // the m smallest values > pivot
  kBelow,         // the m largest values < pivot
};

// Values adjacent to `pivot` on one side, at most m of them, in no
// particular order. Linear expected time (quickselect threshold + filter).
Segment extract_candidates(std::span<const Value> segment, Value pivot,
                           CandidateSide side, std::size_t m,
                           std::uint64_t seed = 0,
                           std::uint64_t* comparisons = nullptr);

// Same, reading the bands of an already partitioned segment.
Segment extract_candidates(const PartitionedSegment& segment,
                           CandidateSide side, std::size_t m,
                           std::uint64_t seed = 0,
                           std::uint64_t* comparisons = nullptr);

// Keep the m smallest (or largest) values of `values`.
Segment keep_smallest(Segment values, std::size_t m, std::uint64_t seed = 0,
                      std::uint64_t* comparisons = nullptr);
Segment keep_largest(Segment values, std::size_t m, std::uint64_t seed = 0,
                     std::uint64_t* comparisons = nullptr);

}  // namespace gks::select
