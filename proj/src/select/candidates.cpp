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

#include "gkselect/select/candidates.hpp"

#include <algorithm>

#include "gkselect/select/quickselect.hpp"

namespace gks::select {

Segment extract_candidates(std::span<const Value> segment, Value pivot,
                           CandidateSide side, std::size_t m,
                           std::uint64_t seed, std::uint64_t* comparisons) {
  if (m == 0) return {};
  Segment pool;
  switch (side) {
    case CandidateSide::kAboveOrEqual:
      std::copy_if(segment.begin(), segment.end(), std::back_inserter(pool),
                   [pivot](Value v) { return v >= pivot; });
      break;
    case CandidateSide::kAbove:
      std::copy_if(segment.begin(), segment.end(), std::back_inserter(pool),
                   [pivot](Value v) { return v > pivot; });
      break;
    case CandidateSide::kBelow:
      std::copy_if(segment.begin(), segment.end(), std::back_inserter(pool),
                   [pivot](Value v) { return v < pivot; });
      break;
  }
  if (comparisons != nullptr) *comparisons += segment.size();
  if (side == CandidateSide::kBelow) {
    return keep_largest(std::move(pool), m, seed, comparisons);
  }
  return keep_smallest(std::move(pool), m, seed, comparisons);
}

Segment extract_candidates(const PartitionedSegment& segment,
                           CandidateSide side, std::size_t m,
                           std::uint64_t seed, std::uint64_t* comparisons) {
  if (m == 0) return {};
  switch (side) {
    case CandidateSide::kAboveOrEqual: {
      const auto pool = std::span<const Value>(segment.values)
                            .subspan(segment.counts.below);
      // The equal band sits first and is already the smallest part.
      if (m <= segment.counts.equal) {
        return Segment(m, segment.pivot);
      }
      return keep_smallest(Segment(pool.begin(), pool.end()), m, seed,
                           comparisons);
    }
    case CandidateSide::kAbove:
      return keep_smallest(Segment(segment.above().begin(), segment.above().end()),
                          m, seed, comparisons);
    case CandidateSide::kBelow:
      return keep_largest(Segment(segment.below().begin(), segment.below().end()),
                         m, seed, comparisons);
  }
  return {};
}

Segment keep_smallest(Segment values, std::size_t m, std::uint64_t seed,
                      std::uint64_t* comparisons) {
  if (m >= values.size()) return values;
  if (m == 0) return {};
  select_in_place(values, m, seed, comparisons);
  values.resize(m);
  return values;
}

Segment keep_largest(Segment values, std::size_t m, std::uint64_t seed,
                     std::uint64_t* comparisons) {
  if (m >= values.size()) return values;
  if (m == 0) return {};
  // The m largest occupy the tail once rank |values|-m+1 is in place.
  select_in_place(values, values.size() - m + 1, seed, comparisons);
  values.erase(values.begin(), values.end() - static_cast<std::ptrdiff_t>(m));
  return values;
}

}  // namespace gks::select
