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

#include <gtest/gtest.h>

#include "gkselect/common/error.hpp"
#include "support/oracle.hpp"

namespace gks::select {
namespace {

TEST(Quickselect, SmallExample) {
  const Segment v{5, 1, 4, 2, 3};
  EXPECT_EQ(quickselect(v, 3), 3);
  EXPECT_EQ(v, (Segment{5, 1, 4, 2, 3}));
}

TEST(Quickselect, Duplicates) {
  EXPECT_EQ(quickselect(Segment{7, 7, 7}, 2), 7);
}

TEST(Quickselect, RankOutOfRange) {
  const Segment v{1, 2, 3};
  for (std::size_t k : {0u, 4u}) {
    try {
      quickselect(v, k);
      FAIL() << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidRank);
    }
  }
  EXPECT_THROW(quickselect(Segment{}, 1), Error);
}

TEST(Quickselect, LargeRandomMatchesSort) {
  testing::Gen gen(1);
  Segment v(100000);
  for (auto& x : v) x = static_cast<Value>(gen.rng());
  const auto sorted = testing::sorted_copy(v);
  for (int i = 0; i < 5; ++i) {
    const auto k = gen.uniform(1, v.size());
    EXPECT_EQ(quickselect(v, k, i), sorted[k - 1]);
  }
}

TEST(Quickselect, PropertyMatchesSortUpTo10k) {
  testing::Gen gen(2);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = gen.uniform(1, trial < 10 ? 10000 : 200);
    const auto v = gen.values(n);
    const auto sorted = testing::sorted_copy(v);
    const auto k = gen.uniform(1, n);
    ASSERT_EQ(quickselect(v, k, trial), sorted[k - 1]) << "n=" << n << " k=" << k;
  }
}

TEST(Quickselect, AdversarialShapesStayFast) {
  // Sorted, reversed, organ-pipe and all-equal inputs must not degrade.
  const std::size_t n = 200000;
  std::vector<Segment> shapes(4, Segment(n));
  for (std::size_t i = 0; i < n; ++i) {
    shapes[0][i] = static_cast<Value>(i);
    shapes[1][i] = static_cast<Value>(n - i);
    shapes[2][i] = static_cast<Value>(std::min(i, n - i));
    shapes[3][i] = 5;
  }
  for (const auto& s : shapes) {
    std::uint64_t cmp = 0;
    const auto sorted = testing::sorted_copy(s);
    EXPECT_EQ(quickselect(s, n / 2, 3, &cmp), sorted[n / 2 - 1]);
    EXPECT_LT(cmp, 40 * n);
  }
}

TEST(SelectInPlace, NthElementContract) {
  testing::Gen gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto v = gen.values(gen.uniform(1, 500));
    const auto k = gen.uniform(1, v.size());
    const auto sorted = testing::sorted_copy(v);
    select_in_place(v, k, trial);
    ASSERT_EQ(v[k - 1], sorted[k - 1]);
    for (std::size_t i = 0; i < k; ++i) ASSERT_LE(v[i], v[k - 1]);
    for (std::size_t i = k; i < v.size(); ++i) ASSERT_GE(v[i], v[k - 1]);
  }
}

}  // namespace
}  // namespace gks::select
