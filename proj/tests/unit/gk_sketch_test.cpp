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

#include "gkselect/sketch/gk_sketch.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "gkselect/common/error.hpp"
#include "support/oracle.hpp"

namespace gks::sketch {
namespace {

using testing::oracle_rank;
using testing::rank_error_sorted;
using testing::sorted_copy;

std::vector<GkTuple> tuples_of(const GkSummary& s) {
  return {s.tuples().begin(), s.tuples().end()};
}

TEST(GkSketch, VariantNames) {
  for (auto v : {GkVariant::kClassical, GkVariant::kFixedBuffer, GkVariant::kGrowingBuffer}) {
    EXPECT_EQ(parse_variant(to_string(v)), v);
  }
  EXPECT_EQ(parse_variant("fixed"), GkVariant::kFixedBuffer);
  EXPECT_THROW(parse_variant("lazy"), Error);
}

TEST(GkSketch, FixedDefaults) {
  const auto c = BufferedGkConfig::fixed_buffer();
  EXPECT_EQ(c.head_size, 50000u);
  EXPECT_EQ(c.compress_threshold, 10000u);
}

TEST(GkSketch, RejectsBadConfigs) {
  EXPECT_THROW(GkSketch(0.01, BufferedGkConfig{GkVariant::kFixedBuffer, 0, 10, 2}), Error);
  EXPECT_THROW(GkSketch(0.01, BufferedGkConfig::growing_buffer(1.0)), Error);
  EXPECT_THROW(GkSketch(0.0), Error);
}

TEST(GkSketch, FirstFlushOfFourElements) {
  GkSketch sk(0.01, BufferedGkConfig{GkVariant::kFixedBuffer, 4, 10000, 2});
  for (Value v : {3, 1, 4}) sk.insert(v);
  EXPECT_EQ(sk.buffered(), 3u);
  EXPECT_TRUE(sk.summary().empty());
  sk.insert(1);
  EXPECT_EQ(sk.work().flushes, 1u);
  EXPECT_EQ(sk.buffered(), 0u);

  GkSummary expect(0.01);
  expect.insert_sorted(std::vector<Value>{1, 1, 3, 4});
  EXPECT_EQ(tuples_of(sk.summary()), tuples_of(expect));
}

TEST(GkSketch, FixedDefaultsAccurate) {
  testing::Gen gen(51);
  std::vector<Value> v(200000);
  for (auto& x : v) x = static_cast<Value>(gen.rng());
  const auto s = build_summary(v, 0.01, BufferedGkConfig::fixed_buffer());
  const auto sorted = sorted_copy(v);
  for (int i = 1; i <= 99; ++i) {
    const double q = i / 100.0;
    ASSERT_LE(rank_error_sorted(sorted, s.query(q), oracle_rank(q, v.size())), 2000u);
  }
}

TEST(GkSketch, GrowingBufferResetsCapacity) {
  GkSketch sk(0.01, BufferedGkConfig::growing_buffer(2.0));
  EXPECT_EQ(sk.head_capacity(), 200u);  // ceil(2 / 0.01)
  testing::Gen gen(52);
  std::uint64_t flushes = 0;
  for (int i = 0; i < 50000; ++i) {
    sk.insert(static_cast<Value>(gen.rng()));
    if (sk.work().flushes != flushes) {
      flushes = sk.work().flushes;
      ASSERT_EQ(sk.head_capacity(),
                static_cast<std::size_t>(std::ceil(2.0 * sk.summary().size())));
    }
  }
  EXPECT_GT(flushes, 3u);
}

TEST(GkSketch, GrowingBufferHundredEntriesGivesTwoHundred) {
  // A flush leaving exactly 100 entries: eps large enough that nothing can
  // be compressed away below 100 distinct values would be hard to arrange,
  // so use an entry count produced by a flush of 100 distinct values into
  // an empty summary with a band too small to merge anything.
  GkSketch sk(0.001, BufferedGkConfig{GkVariant::kGrowingBuffer, 100, 0, 2.0});
  EXPECT_EQ(sk.head_capacity(), 2000u);
  for (Value v = 0; v < 100; ++v) sk.insert(v);
  sk.flush();
  ASSERT_EQ(sk.summary().size(), 100u);
  EXPECT_EQ(sk.head_capacity(), 200u);
}

TEST(GkSketch, FlushOfEmptyBufferIsNoop) {
  GkSketch sk(0.05, BufferedGkConfig{GkVariant::kFixedBuffer, 8, 4, 2});
  for (Value v = 0; v < 16; ++v) sk.insert(v);
  const auto before = tuples_of(sk.summary());
  const auto flushes = sk.work().flushes;
  sk.flush();
  EXPECT_EQ(tuples_of(sk.summary()), before);
  EXPECT_EQ(sk.work().flushes, flushes);
}

TEST(GkSketch, SingletonFlushMatchesClassicalInsert) {
  testing::Gen gen(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = gen.values(gen.uniform(1, 40));
    GkSketch sk(0.1, BufferedGkConfig{GkVariant::kFixedBuffer, 1000, 100000, 2});
    for (auto v : base) sk.insert(v);
    sk.flush();
    GkSummary classical = sk.summary();

    const Value x = gen.value(-10, 10);
    sk.insert(x);
    sk.flush();
    classical.insert(x);
    ASSERT_EQ(classical.compress_calls(), 0u);
    EXPECT_EQ(tuples_of(sk.summary()), tuples_of(classical));
  }
}

TEST(GkSketch, FinishFlushesPartialBuffer) {
  GkSketch sk(0.01);
  for (Value v = 0; v < 123; ++v) sk.insert(v);
  EXPECT_EQ(sk.summary().count(), 0u);
  EXPECT_EQ(sk.count(), 123u);
  const auto s = sk.finish();
  EXPECT_EQ(s.count(), 123u);
  EXPECT_EQ(sk.buffered(), 0u);
}

TEST(GkSketch, VariantsShareSoundness) {
  testing::Gen gen(54);
  for (int trial = 0; trial < 24; ++trial) {
    const auto v = gen.values(gen.uniform(1, 60000));
    const auto sorted = sorted_copy(v);
    const double eps = trial % 2 ? 0.01 : 0.002;
    for (auto variant :
         {GkVariant::kClassical, GkVariant::kFixedBuffer, GkVariant::kGrowingBuffer}) {
      const auto s = build_summary(v, eps, BufferedGkConfig::for_variant(variant));
      ASSERT_EQ(s.count(), v.size());
      const auto limit = static_cast<std::uint64_t>(std::floor(eps * v.size()));
      for (int i = 0; i <= 100; ++i) {
        const double q = i / 100.0;
        ASSERT_LE(rank_error_sorted(sorted, s.query(q), oracle_rank(q, v.size())), limit)
            << to_string(variant) << " n=" << v.size() << " q=" << q;
      }
    }
  }
}

TEST(GkSketch, GrowingWorkIsLinearAtSmallScale) {
  testing::Gen gen(55);
  for (std::size_t n : {5000u, 50000u}) {
    GkSketch sk(0.01, BufferedGkConfig::growing_buffer());
    for (std::size_t i = 0; i < n; ++i) sk.insert(static_cast<Value>(gen.rng()));
    sk.flush();
    EXPECT_LE(sk.work().flush_and_compress(), 4 * n);
  }
}

}  // namespace
}  // namespace gks::sketch
