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
#include <string>

namespace gks::exec {

PartitionedDataset make_dataset(std::span<const Value> values,
                                std::size_t partitions) {
  if (partitions == 0) {
    throw Error(ErrorCode::kInvalidArgument, "partition count must be >= 1");
  }
  std::vector<Segment> parts(partitions);
  const std::size_t base = values.size() / partitions;
  for (std::size_t p = 0; p < partitions; ++p) {
    parts[p].reserve(base + 1);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    parts[i % partitions].push_back(values[i]);
  }
  return PartitionedDataset(std::move(parts));
}

std::size_t total_size(const PartitionedDataset& ds) {
  std::size_t n = 0;
  for (const auto& seg : ds.partitions()) n += seg.size();
  return n;
}

std::vector<std::size_t> partition_sizes(const PartitionedDataset& ds) {
  std::vector<std::size_t> sizes;
  sizes.reserve(ds.num_partitions());
  for (const auto& seg : ds.partitions()) sizes.push_back(seg.size());
  return sizes;
}

Segment Engine::collect_values(const PartitionedDataset& ds) {
  ++stats_.actions;
  Segment out;
  out.reserve(total_size(ds));
  for (const auto& seg : ds.partitions()) {
    out.insert(out.end(), seg.begin(), seg.end());
  }
  stats_.collected_elements += out.size();
  return out;
}

PartitionedDataset Engine::shuffle(
    const PartitionedDataset& ds,
    const std::function<std::size_t(Value)>& route) {
  ++stats_.actions;
  ++stats_.shuffle_stages;
  const std::size_t parts = ds.num_partitions();

  // Map side: every source partition splits into one bucket per destination.
  std::vector<std::vector<Segment>> buckets(parts);
  pool_.parallel_for(parts, [&](std::size_t src) {
    auto& mine = buckets[src];
    mine.resize(parts);
    for (Value v : ds.partition(src)) {
      const std::size_t dst = route(v);
      if (dst >= parts) {
        throw Error(ErrorCode::kInvalidRoute,
                    "value routed to partition " + std::to_string(dst) +
                        " of " + std::to_string(parts));
      }
      mine[dst].push_back(v);
    }
  });

  // Reduce side: each destination concatenates its buckets in source order.
  std::vector<Segment> out(parts);
  pool_.parallel_for(parts, [&](std::size_t dst) {
    std::size_t size = 0;
    for (std::size_t src = 0; src < parts; ++src) size += buckets[src][dst].size();
    out[dst].reserve(size);
    for (std::size_t src = 0; src < parts; ++src) {
      const auto& b = buckets[src][dst];
      out[dst].insert(out[dst].end(), b.begin(), b.end());
    }
  });

  stats_.shuffled_records += total_size(ds);
  return PartitionedDataset(std::move(out));
}

}  // namespace gks::exec
