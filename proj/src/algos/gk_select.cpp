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

#include <algorithm>
#include <atomic>

#include "gkselect/algos/quantile.hpp"
#include "gkselect/select/partition.hpp"
#include "gkselect/select/quickselect.hpp"

namespace gks::algos {

using exec::Engine;
using exec::PartitionedDataset;
using exec::TaskContext;
using select::CandidateSide;
using select::PartitionedSegment;
using sketch::GkSummary;

GkSummary gk_approx_summary(Engine& engine, const PartitionedDataset& ds,
                            const GkApproxOptions& options) {
  const auto config = sketch::BufferedGkConfig::for_variant(options.variant);
  auto summaries = engine.map_partitions(ds, [&](const Segment& seg) {
    return sketch::build_summary(seg, options.epsilon, config);
  });
  const auto collected = engine.collect(summaries);
  return sketch::driver_merge(collected, options.driver_merge).summary;
}

AlgoResult gk_approx_quantile(Engine& engine, const PartitionedDataset& ds,
                              double q, const GkApproxOptions& options) {
  const auto before = engine.stats();
  const GkSummary summary = gk_approx_summary(engine, ds, options);
  if (summary.empty()) {
    throw Error(ErrorCode::kEmptyInput, "quantile of an empty dataset");
  }
  AlgoResult result;
  result.value = summary.query(q);
  result.rounds = 1;
  result.stats = engine.stats() - before;
  return result;
}

AlgoResult gk_select(Engine& engine, const PartitionedDataset& ds, double q,
                     const GkSelectOptions& options) {
  const auto before = engine.stats();
  AlgoResult result;

  // Approximate pivot from the merged sketch (action 1).
  const GkSummary summary = gk_approx_summary(engine, ds, options.sketch);
  if (summary.empty()) {
    throw Error(ErrorCode::kEmptyInput, "quantile of an empty dataset");
  }
  const std::uint64_t n = summary.count();
  const auto query = QuantileQuery::make(q, n);
  const auto pivot = engine.broadcast(summary.query_rank(query.k));

  // Three-way partition around the pivot, kept for the extraction pass.
  const auto parts = engine.map_partitions(
      ds, [&pivot](TaskContext& ctx, const Segment& seg) {
        std::uint64_t cmp = 0;
        auto p = select::hoare_partition(seg, *pivot, &cmp);
        ctx.add_comparisons(cmp);
        return p;
      });
  engine.persist(parts);

  // Rank correction from the per-partition counts (action 2).
  const auto counts = engine.collect(engine.map_partitions(
      parts, [](const PartitionedSegment& p) { return p.counts; }));
  RankCorrection corr;
  corr.pivot = *pivot;
  for (const auto& c : counts) {
    corr.total_below += c.below;
    corr.total_equal += c.equal;
  }
  const std::uint64_t k = query.k;
  const std::uint64_t c_below = corr.total_below;
  const std::uint64_t c_upto = corr.total_below + corr.total_equal;

  CandidateSide side = CandidateSide::kAbove;
  std::size_t cap = 0;
  bool pivot_is_answer = false;
  if (k <= c_below) {
    // Pivot high: the answer is the (C - k + 1)-th largest value below it.
    side = CandidateSide::kBelow;
    corr.delta_k = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(c_below);
    cap = c_below - k + 1;
  } else if (k <= c_upto) {
    pivot_is_answer = true;
  } else {
    // Pivot low: the answer is the delta_k-th smallest value above it.
    side = CandidateSide::kAbove;
    corr.delta_k = static_cast<std::int64_t>(k - c_upto);
    cap = k - c_upto;
  }
  engine.broadcast(corr.delta_k);
  result.correction = corr;
  result.candidate_cap = cap;

  if (pivot_is_answer && options.skip_redundant_reduce) {
    result.value = corr.pivot;
    result.rounds = 2;
    result.stats = engine.stats() - before;
    return result;
  }

  // Local candidate extraction, then a pruning tree reduce (action 3).
  const std::uint64_t seed = options.seed;
  const auto candidates = engine.map_partitions(
      parts, [&](TaskContext& ctx, const PartitionedSegment& p) {
        std::uint64_t cmp = 0;
        CandidateSet set{select::extract_candidates(
                             p, side, cap, mix_seed(seed, ctx.partition_index()), &cmp),
                         cap, side};
        ctx.add_comparisons(cmp);
        return set;
      });

  std::atomic<std::size_t> max_node{0};
  auto note_size = [&max_node](std::size_t s) {
    std::size_t cur = max_node.load(std::memory_order_relaxed);
    while (s > cur && !max_node.compare_exchange_weak(cur, s)) {
    }
  };
  for (const auto& c : candidates.partitions()) note_size(c.values.size());

  const CandidateSet final_set = engine.tree_reduce(
      candidates, [&](CandidateSet a, CandidateSet b) {
        a.values.insert(a.values.end(), b.values.begin(), b.values.end());
        a.values = a.side == CandidateSide::kBelow
                       ? select::keep_largest(std::move(a.values), a.capacity, seed)
                       : select::keep_smallest(std::move(a.values), a.capacity, seed);
        note_size(a.values.size());
        return a;
      });
  result.max_candidates_at_node = max_node.load();

  // Final selection at the driver.
  if (pivot_is_answer) {
    result.value = corr.pivot;
  } else if (side == CandidateSide::kAbove) {
    result.value = select::quickselect(final_set.values, cap, seed);
  } else {
    // (C - k + 1)-th largest == (|set| - cap + 1)-th smallest.
    result.value = select::quickselect(final_set.values,
                                       final_set.values.size() - cap + 1, seed);
  }
  result.rounds = 3;
  result.stats = engine.stats() - before;
  return result;
}

}  // namespace gks::algos
