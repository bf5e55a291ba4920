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

#include "gkselect/exec/engine.hpp"

#include <atomic>
#include <numeric>

#include <gtest/gtest.h>

#include "support/oracle.hpp"

namespace gks::exec {
namespace {

std::vector<Value> iota_values(std::size_t n, Value start = 1) {
  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), start);
  return v;
}

Segment flatten(const PartitionedDataset& ds) {
  Segment out;
  for (const auto& p : ds.partitions()) out.insert(out.end(), p.begin(), p.end());
  return out;
}

PartitionedDataset two_by_two() {
  return PartitionedDataset({Segment{1, 2}, Segment{3, 4}});
}

TEST(MakeDataset, EvenSplit) {
  const auto v = iota_values(6);
  EXPECT_EQ(partition_sizes(make_dataset(v, 3)), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(MakeDataset, RemainderGoesToEarliestPartitions) {
  const auto v = iota_values(7);
  const auto ds = make_dataset(v, 3);
  EXPECT_EQ(partition_sizes(ds), (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(ds.partition(0), (Segment{1, 4, 7}));  // arrival order
}

TEST(MakeDataset, EmptyInput) {
  const auto ds = make_dataset({}, 2);
  EXPECT_EQ(ds.num_partitions(), 2u);
  EXPECT_EQ(total_size(ds), 0u);
}

TEST(MakeDataset, ZeroPartitionsIsInvalid) {
  const auto v = iota_values(3);
  try {
    make_dataset(v, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(MakeDataset, BalancedForAnyShape) {
  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const auto n = gen.uniform(0, 500);
    const auto p = gen.uniform(1, 40);
    const auto v = gen.values(n);
    const auto ds = make_dataset(v, p);
    ASSERT_EQ(ds.num_partitions(), p);
    for (const auto s : partition_sizes(ds)) {
      EXPECT_LE(std::abs(static_cast<double>(s) - static_cast<double>(n) / p), 1.0);
    }
    EXPECT_EQ(testing::histogram(flatten(ds)), testing::histogram(v));
  }
}

TEST(MapPartitions, IdentityAndFilter) {
  Engine engine;
  const auto ds = two_by_two();
  const auto same = engine.map_partitions(ds, [](const Segment& s) { return s; });
  EXPECT_EQ(same.partition(0), (Segment{1, 2}));
  EXPECT_EQ(same.partition(1), (Segment{3, 4}));

  const auto evens = engine.map_partitions(ds, [](const Segment& s) {
    Segment out;
    for (auto x : s) if (x % 2 == 0) out.push_back(x);
    return out;
  });
  EXPECT_EQ(evens.partition(0), (Segment{2}));
  EXPECT_EQ(evens.partition(1), (Segment{4}));
  EXPECT_EQ(engine.stats().actions, 0u);
}

TEST(MapPartitions, PreservesPartitionCountAndInput) {
  Engine engine(3);
  const auto v = iota_values(100);
  const auto ds = make_dataset(v, 7);
  const auto out = engine.map_partitions(ds, [](const Segment& s) { return s.size(); });
  EXPECT_EQ(out.num_partitions(), 7u);
  EXPECT_EQ(total_size(ds), 100u);
  EXPECT_EQ(engine.stats(), ExecStats{});
}

TEST(MapPartitions, PassesPartitionIndexAndComparisons) {
  Engine engine(2);
  const auto ds = make_dataset(iota_values(10), 5);
  const auto idx = engine.map_partitions(ds, [](TaskContext& ctx, const Segment&) {
    ctx.add_comparisons(2);
    return ctx.partition_index();
  });
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(idx.partition(i), i);
  EXPECT_EQ(engine.stats().comparisons, 10u);
}

TEST(Collect, CountsActionAndElements) {
  Engine engine;
  const Partitioned<std::size_t> counts({3, 5, 2});
  EXPECT_EQ(engine.collect(counts), (std::vector<std::size_t>{3, 5, 2}));
  EXPECT_EQ(engine.stats().actions, 1u);
  EXPECT_EQ(engine.stats().collected_elements, 3u);

  const auto empty = make_dataset({}, 3);
  const auto parts = engine.collect(empty);
  EXPECT_EQ(parts.size(), 3u);
  EXPECT_EQ(engine.stats().actions, 2u);
  EXPECT_EQ(engine.stats().collected_elements, 3u);
}

TEST(Collect, ElementsMatchManualSum) {
  Engine engine;
  testing::Gen gen(3);
  const auto v = gen.values(321);
  const auto ds = make_dataset(v, 6);
  const auto values = engine.collect_values(ds);
  EXPECT_EQ(engine.stats().collected_elements, 321u);
  EXPECT_EQ(engine.stats().actions, 1u);
  EXPECT_EQ(testing::histogram(values), testing::histogram(v));
}

TEST(TreeReduce, SumOfFour) {
  Engine engine;
  const Partitioned<int> xs({1, 2, 3, 4});
  EXPECT_EQ(engine.tree_reduce(xs, std::plus<>()), 10);
  EXPECT_EQ(engine.stats().tree_reduce_merges, 3u);
  EXPECT_EQ(engine.stats().actions, 1u);
}

TEST(TreeReduce, SingleLeafNeedsNoMerge) {
  Engine engine;
  const Partitioned<int> xs({42});
  EXPECT_EQ(engine.tree_reduce(xs, [](int, int) -> int { throw 1; }), 42);
  EXPECT_EQ(engine.stats().tree_reduce_merges, 0u);
}

TEST(TreeReduce, MergeCountIsPMinusOne) {
  for (std::size_t p = 2; p <= 32; ++p) {
    Engine engine(2);
    std::vector<std::uint64_t> leaves(p, 1);
    std::atomic<std::size_t> calls{0};
    const auto total = engine.tree_reduce(
        Partitioned<std::uint64_t>(leaves), [&](std::uint64_t a, std::uint64_t b) {
          calls++;
          return a + b;
        });
    EXPECT_EQ(total, p);
    EXPECT_EQ(engine.stats().tree_reduce_merges, p - 1) << "P=" << p;
    EXPECT_EQ(calls.load(), p - 1);
  }
}

TEST(TreeReduce, EmptyContributionsThrow) {
  Engine engine;
  const Partitioned<std::optional<int>> none({std::nullopt, std::nullopt});
  try {
    engine.tree_reduce(none, std::plus<>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyReduce);
  }
  const Partitioned<std::optional<int>> some({std::nullopt, 4, std::nullopt, 5});
  EXPECT_EQ(engine.tree_reduce(some, std::plus<>()), 9);
}

TEST(TreeReduce, MatchesSequentialFold) {
  // Associative but not commutative: string-like concatenation of vectors.
  testing::Gen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen.uniform(1, 40);
    std::vector<Segment> leaves(p);
    for (auto& l : leaves) l = gen.values(gen.uniform(0, 5));
    Engine engine(1 + trial % 3);
    const auto tree = engine.tree_reduce(Partitioned<Segment>(leaves),
                                         [](Segment a, const Segment& b) {
                                           a.insert(a.end(), b.begin(), b.end());
                                           return a;
                                         });
    Segment fold;
    for (const auto& l : leaves) fold.insert(fold.end(), l.begin(), l.end());
    EXPECT_EQ(tree, fold);

    std::vector<std::int64_t> nums(p);
    for (auto& x : nums) x = gen.value(-1000, 1000);
    EXPECT_EQ(engine.tree_reduce(Partitioned<std::int64_t>(nums), std::plus<>()),
              std::accumulate(nums.begin(), nums.end(), std::int64_t{0}));
  }
}

TEST(Broadcast, NoActionAndCountsElements) {
  Engine engine(2);
  const auto ds = two_by_two();
  const auto b = engine.broadcast(Value{7});
  const auto seen = engine.map_partitions(ds, [&b](const Segment&) { return *b; });
  EXPECT_EQ(seen.partition(0), 7);
  EXPECT_EQ(seen.partition(1), 7);
  EXPECT_EQ(engine.stats().actions, 0u);
  EXPECT_EQ(engine.stats().broadcast_elements, 1u);
  engine.broadcast(std::int64_t{-3});
  EXPECT_EQ(engine.stats().broadcast_elements, 2u);
}

TEST(Persist, Idempotent) {
  Engine engine;
  std::atomic<int> evaluations{0};
  const auto ds = make_dataset(iota_values(10), 2);
  const auto mapped = engine.map_partitions(ds, [&](const Segment& s) {
    evaluations++;
    return s;
  });
  engine.persist(mapped);
  const auto copy = mapped;
  engine.persist(copy);
  EXPECT_EQ(engine.stats().persists, 1u);
  EXPECT_EQ(engine.stats().persisted_records, 10u);
  EXPECT_TRUE(copy.persisted());
  // Two reads of the persisted dataset run f once per partition in total.
  engine.collect(mapped);
  engine.collect(copy);
  EXPECT_EQ(evaluations.load(), 2);
  EXPECT_EQ(engine.stats().actions, 2u);
}

TEST(Shuffle, ModTwo) {
  Engine engine;
  const auto ds = PartitionedDataset({Segment{1, 2}, Segment{3, 4}});
  const auto out = engine.shuffle(ds, [](Value v) { return static_cast<std::size_t>(v % 2); });
  EXPECT_EQ(testing::histogram(out.partition(0)), testing::histogram(Segment{2, 4}));
  EXPECT_EQ(testing::histogram(out.partition(1)), testing::histogram(Segment{1, 3}));
  EXPECT_EQ(engine.stats().shuffle_stages, 1u);
  EXPECT_EQ(engine.stats().actions, 1u);
  EXPECT_EQ(engine.stats().shuffled_records, 4u);
}

TEST(Shuffle, InvalidRoute) {
  Engine engine;
  try {
    engine.shuffle(two_by_two(), [](Value) { return std::size_t{2}; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidRoute);
  }
}

TEST(Shuffle, ConservesMultiset) {
  testing::Gen gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = gen.values(gen.uniform(0, 2000));
    const auto p = gen.uniform(1, 16);
    Engine engine(2);
    const auto ds = make_dataset(v, p);
    const auto out = engine.shuffle(ds, [p](Value x) {
      return static_cast<std::size_t>(static_cast<std::uint64_t>(x) % p);
    });
    ASSERT_EQ(out.num_partitions(), p);
    EXPECT_EQ(testing::histogram(engine.collect_values(out)), testing::histogram(v));
    for (std::size_t j = 0; j < p; ++j) {
      for (auto x : out.partition(j)) {
        EXPECT_EQ(static_cast<std::uint64_t>(x) % p, j);
      }
    }
  }
}

TEST(Stats, CountersOnlyGrowAndDiff) {
  Engine engine;
  const auto a = engine.stats();
  engine.collect(two_by_two());
  engine.broadcast(Value{1});
  const auto d = engine.stats() - a;
  EXPECT_EQ(d.actions, 1u);
  EXPECT_EQ(d.broadcast_elements, 1u);
  engine.reset_stats();
  EXPECT_EQ(engine.stats(), ExecStats{});
}

TEST(CostModel, Examples) {
  EXPECT_EQ(estimate_latency(ExecStats{}, CostModel{3, 2, 1}), 0.0);
  ExecStats one;
  one.actions = 1;
  EXPECT_EQ(estimate_latency(one, CostModel{5, 0, 0}), 5.0);

  ExecStats s;
  s.actions = 2;
  s.collected_elements = 10;
  s.broadcast_elements = 3;
  s.shuffled_records = 4;
  s.tree_transfer_elements = 6;
  // 2*L + g*(10+3+4) + g*h*6
  EXPECT_DOUBLE_EQ(estimate_latency(s, CostModel{1.5, 2, 0.5}), 3 + 34 + 6);
  EXPECT_THROW(estimate_latency(s, CostModel{-1, 0, 0}), Error);
}

}  // namespace
}  // namespace gks::exec
