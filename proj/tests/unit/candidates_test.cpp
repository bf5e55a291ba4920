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

#include <gtest/gtest.h>

#include "support/oracle.hpp"

namespace gks::select {
namespace {

// Sort-based reference extraction.
Segment oracle_extract(const Segment& v, Value pivot, CandidateSide side, std::size_t m) {
  auto s = testing::sorted_copy(v);
  Segment out;
  if (side == CandidateSide::kBelow) {
    for (auto it = s.rbegin(); it != s.rend() && out.size() < m; ++it) {
      if (*it < pivot) out.push_back(*it);
    }
  } else {
    for (auto x : s) {
      if (out.size() == m) break;
      if (x > pivot || (side == CandidateSide::kAboveOrEqual && x == pivot)) {
        out.push_back(x);
      }
    }
  }
  return out;
}

TEST(ExtractCandidates, AboveOrEqualExample) {
  const Segment v{9, 2, 7, 5, 5, 1};
  EXPECT_EQ(testing::histogram(extract_candidates(v, 5, CandidateSide::kAboveOrEqual, 2)),
            testing::histogram(Segment{5, 5}));
  EXPECT_EQ(testing::histogram(extract_candidates(v, 5, CandidateSide::kAbove, 2)),
            testing::histogram(Segment{7, 9}));
  EXPECT_EQ(testing::histogram(extract_candidates(v, 5, CandidateSide::kBelow, 5)),
            testing::histogram(Segment{1, 2}));
}

TEST(ExtractCandidates, ZeroCountIsEmpty) {
  const Segment v{9, 2, 7, 5, 5, 1};
  for (auto side : {CandidateSide::kAboveOrEqual, CandidateSide::kAbove, CandidateSide::kBelow}) {
    EXPECT_TRUE(extract_candidates(v, 5, side, 0).empty());
    EXPECT_TRUE(extract_candidates(hoare_partition(v, 5), side, 0).empty());
  }
}

TEST(ExtractCandidates, MatchesSortOracle) {
  testing::Gen gen(31);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = gen.values(gen.uniform(0, 300));
    const Value pivot = v.empty() ? 0 : v[gen.uniform(0, v.size() - 1)] + gen.value(-1, 1);
    const auto m = gen.uniform(0, v.size() + 2);
    const auto parted = hoare_partition(v, pivot);
    for (auto side : {CandidateSide::kAboveOrEqual, CandidateSide::kAbove, CandidateSide::kBelow}) {
      const auto expect = testing::histogram(oracle_extract(v, pivot, side, m));
      ASSERT_EQ(testing::histogram(extract_candidates(v, pivot, side, m, trial)), expect);
      ASSERT_EQ(testing::histogram(extract_candidates(parted, side, m, trial)), expect);
    }
  }
}

TEST(ExtractCandidates, BothSidesWithFullCountReproduceSegment) {
  testing::Gen gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = gen.values(gen.uniform(1, 200));
    const Value pivot = v[gen.uniform(0, v.size() - 1)];
    auto all = extract_candidates(v, pivot, CandidateSide::kAboveOrEqual, v.size());
    const auto below = extract_candidates(v, pivot, CandidateSide::kBelow, v.size());
    all.insert(all.end(), below.begin(), below.end());
    EXPECT_EQ(testing::histogram(all), testing::histogram(v));
  }
}

TEST(KeepSmallestLargest, BoundedWindows) {
  testing::Gen gen(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = gen.values(gen.uniform(0, 100));
    const auto m = gen.uniform(0, 120);
    const auto s = testing::sorted_copy(v);
    const auto take = std::min<std::size_t>(m, s.size());
    EXPECT_EQ(testing::histogram(keep_smallest(v, m, trial)),
              testing::histogram(Segment(s.begin(), s.begin() + take)));
    EXPECT_EQ(testing::histogram(keep_largest(v, m, trial)),
              testing::histogram(Segment(s.end() - take, s.end())));
  }
}

}  // namespace
}  // namespace gks::select
