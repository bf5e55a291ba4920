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

#include "gkselect/algos/quantile.hpp"
#include "gkselect/select/partition.hpp"
#include "gkselect/select/reservoir.hpp"

namespace gks::algos {

using exec::Engine;
using exec::PartitionedDataset;
using exec::TaskContext;
using select::PartitionCounts;
using select::PartitionedSegment;
using select::ReservoirPick;
using select::SplitMix64;

namespace {

// Per-partition report of one round. `key` seeds the random choice made
// when two reports meet, so combining is deterministic whatever the order
// in which tree nodes run.
struct RoundReport {
  PartitionCounts counts;
  ReservoirPick below;
  ReservoirPick above;
  std::uint64_t key = 0;
};

RoundReport combine_reports(const RoundReport& a, const RoundReport& b) {
  SplitMix64 rng(mix_seed(a.key, b.key));
  RoundReport out;
  out.counts = a.counts;
  out.counts += b.counts;
  out.below = ReservoirPick::combine(a.below, b.below, rng);
  out.above = ReservoirPick::combine(a.above, b.above, rng);
  out.key = mix_seed(a.key, b.key, 1);
  return out;
}

enum class Aggregation { kTreeReduce, kCollect };

RoundReport aggregate(Engine& engine, const exec::Partitioned<RoundReport>& reports,
                      Aggregation how) {
  if (how == Aggregation::kTreeReduce) {
    return engine.tree_reduce(reports, combine_reports);
  }
  // The driver sums counts and draws the next pivots itself.
  const auto all = engine.collect(reports);
  RoundReport acc = all.front();
  for (std::size_t i = 1; i < all.size(); ++i) acc = combine_reports(acc, all[i]);
  return acc;
}

Segment copy_of(std::span<const Value> s) { return Segment(s.begin(), s.end()); }

AlgoResult count_and_discard(Engine& engine, const PartitionedDataset& ds,
                             double q, std::uint64_t seed, Aggregation how) {
  const auto before = engine.stats();
  AlgoResult result;
  std::uint64_t round = 0;

  // Bootstrap: total size and a uniform initial pivot in one action. The
  // pick travels in the `below` slot with the partition size as weight.
  auto boot = engine.map_partitions(ds, [&](TaskContext& ctx, const Segment& seg) {
    SplitMix64 rng(mix_seed(seed, round, ctx.partition_index()));
    RoundReport r;
    r.counts.below = seg.size();
    r.below = select::reservoir_pick(seg, rng);
    r.key = mix_seed(seed, round, ctx.partition_index() + 0x10000);
    return r;
  });
  const RoundReport start = aggregate(engine, boot, how);
  ++round;

  const std::uint64_t n = start.counts.below;
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "quantile of an empty dataset");
  const std::uint64_t k = target_rank(q, n);

  Value pivot = *start.below.value;
  std::uint64_t offset = 0;  // values known to rank below the active range
  std::uint64_t active_n = n;
  PartitionedDataset active = ds;

  // A single-element range needs no further counting: its pick is the answer.
  while (active_n > 1) {
    const auto bp = engine.broadcast(pivot);
    const auto parts = engine.map_partitions(
        active, [&bp](TaskContext& ctx, const Segment& seg) {
          std::uint64_t cmp = 0;
          auto p = select::hoare_partition(seg, *bp, &cmp);
          ctx.add_comparisons(cmp);
          return p;
        });
    engine.persist(parts);

    const auto reports = engine.map_partitions(
        parts, [&](TaskContext& ctx, const PartitionedSegment& p) {
          SplitMix64 rng(mix_seed(seed, round, ctx.partition_index()));
          RoundReport r;
          r.counts = p.counts;
          r.below = select::reservoir_pick(p.below(), rng);
          r.above = select::reservoir_pick(p.above(), rng);
          r.key = mix_seed(seed, round, ctx.partition_index() + 0x10000);
          return r;
        });
    const RoundReport total = aggregate(engine, reports, how);
    ++round;

    const std::uint64_t below = total.counts.below;
    const std::uint64_t equal = total.counts.equal;
    if (k <= offset + below) {
      // Pivot high: continue left.
      pivot = *total.below.value;
      active_n = below;
      active = engine.map_partitions(
          parts, [](const PartitionedSegment& p) { return copy_of(p.below()); });
    } else if (k <= offset + below + equal) {
      break;
    } else {
      // Pivot low: continue right.
      offset += below + equal;
      pivot = *total.above.value;
      active_n = total.counts.above;
      active = engine.map_partitions(
          parts, [](const PartitionedSegment& p) { return copy_of(p.above()); });
    }
  }

  result.value = pivot;
  result.rounds = round;
  result.stats = engine.stats() - before;
  return result;
}

}  // namespace

AlgoResult afs_select(Engine& engine, const PartitionedDataset& ds, double q,
                      std::uint64_t seed) {
  return count_and_discard(engine, ds, q, seed, Aggregation::kTreeReduce);
}

AlgoResult jeffers_select(Engine& engine, const PartitionedDataset& ds,
                          double q, std::uint64_t seed) {
  return count_and_discard(engine, ds, q, seed, Aggregation::kCollect);
}

}  // namespace gks::algos
