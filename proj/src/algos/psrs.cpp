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
#include <bit>

#include "gkselect/algos/quantile.hpp"
#include "gkselect/select/random.hpp"

namespace gks::algos {

using exec::Engine;
using exec::PartitionedDataset;
using exec::TaskContext;

namespace {

struct LocalSample {
  std::uint64_t partition_size = 0;
  Segment values;

  std::size_t payload_size() const noexcept { return values.size(); }
};

// Algorithm R: a uniform sample of min(s, |seg|) values in one pass.
Segment sample_of(const Segment& seg, std::size_t s, select::SplitMix64& rng) {
  Segment out;
  out.reserve(std::min(s, seg.size()));
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (i < s) {
      out.push_back(seg[i]);
    } else {
      const std::uint64_t j = rng.below(i + 1);
      if (j < s) out[j] = seg[i];
    }
  }
  return out;
}

}  // namespace

AlgoResult psrs_full_sort_quantile(Engine& engine, const PartitionedDataset& ds,
                                   double q, const PsrsOptions& options) {
  const auto before = engine.stats();
  const std::size_t parts = ds.num_partitions();
  const std::size_t per_partition = options.sample_per_partition != 0
                                        ? options.sample_per_partition
                                        : std::max<std::size_t>(20, 2 * parts);

  // Local samples gathered at the driver (action 1).
  const auto samples = engine.collect(engine.map_partitions(
      ds, [&](TaskContext& ctx, const Segment& seg) {
        select::SplitMix64 rng(mix_seed(options.seed, ctx.partition_index()));
        return LocalSample{seg.size(), sample_of(seg, per_partition, rng)};
      }));

  std::uint64_t n = 0;
  Segment pooled;
  for (const auto& s : samples) {
    n += s.partition_size;
    pooled.insert(pooled.end(), s.values.begin(), s.values.end());
  }
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "quantile of an empty dataset");
  const std::uint64_t k = target_rank(q, n);

  // P - 1 splitters at evenly spaced sample quantiles.
  std::sort(pooled.begin(), pooled.end());
  Segment cut;
  cut.reserve(parts - 1);
  for (std::size_t j = 1; j < parts; ++j) {
    cut.push_back(pooled[j * pooled.size() / parts]);
  }
  const auto splitters = engine.broadcast(std::move(cut));

  // Range shuffle (action 2, the only shuffle stage). Bucket j receives the
  // values v with splitter[j-1] < v <= splitter[j].
  const auto buckets = engine.shuffle(ds, [&splitters](Value v) -> std::size_t {
    const auto& s = *splitters;
    return static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  });

  // Bucket sizes come with the shuffle output; locate rank k.
  const auto sizes = exec::partition_sizes(buckets);
  std::size_t target = 0;
  std::uint64_t preceding = 0;
  while (preceding + sizes[target] < k) preceding += sizes[target++];

  // Local sort. Without full_sort only the bucket holding rank k is sorted
  // and every other bucket is dropped from the result.
  const bool full = options.full_sort;
  const auto sorted = engine.map_partitions(
      buckets, [&](TaskContext& ctx, const Segment& seg) {
        if (!full && ctx.partition_index() != target) return Segment{};
        Segment s = seg;
        std::sort(s.begin(), s.end());
        // Estimated as n log2 n; std::sort does not report its count.
        ctx.add_comparisons(s.size() * std::bit_width(s.size()));
        return s;
      });

  AlgoResult result;
  result.value = sorted.partition(target)[k - preceding - 1];
  result.rounds = 2;
  result.stats = engine.stats() - before;
  return result;
}

}  // namespace gks::algos
