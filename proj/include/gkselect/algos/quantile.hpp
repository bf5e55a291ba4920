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
#include <optional>
#include <string_view>

#include "gkselect/common/rank.hpp"
#include "gkselect/common/types.hpp"
#include "gkselect/exec/engine.hpp"
#include "gkselect/select/candidates.hpp"
#include "gkselect/sketch/driver_merge.hpp"
#include "gkselect/sketch/gk_sketch.hpp"

namespace gks::algos {

struct QuantileQuery {
  double q = 0.5;
  std::uint64_t k = 1;

  static QuantileQuery make(double q, std::uint64_t n) {
    return QuantileQuery{q, target_rank(q, n)};
  }
};

// How far the approximate pivot landed from rank k. delta_k is k - C when
// the pivot is high (k <= C), zero when k falls in the pivot's own band of
// duplicates, and k - C - E when the pivot is low.
struct RankCorrection {
  Value pivot = 0;
  std::uint64_t total_below = 0;  // C
  std::uint64_t total_equal = 0;  // E
  std::int64_t delta_k = 0;
};

// Candidates carried through the pruning tree reduce.
struct CandidateSet {
  Segment values;
  std::size_t capacity = 0;
  select::CandidateSide side = select::CandidateSide::kAbove;

  std::size_t payload_size() const noexcept { return values.size(); }
};

struct AlgoResult {
  Value value = 0;
  exec::ExecStats stats;
  // Actions issued by count-and-discard loops (bootstrap included); 1 for
  // the sketch, 3 for GK Select, 2 for the full sort.
  std::size_t rounds = 0;
  std::optional<RankCorrection> correction;  // GK Select only
  std::size_t candidate_cap = 0;             // GK Select only
  std::size_t max_candidates_at_node = 0;    // GK Select only
};

enum class Algorithm { kGkApprox, kGkSelect, kAfs, kJeffers, kFullSort };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
bool is_exact(Algorithm a);

struct GkApproxOptions {
  double epsilon = sketch::kDefaultEpsilon;
  sketch::GkVariant variant = sketch::GkVariant::kFixedBuffer;
  sketch::DriverMerge driver_merge = sketch::DriverMerge::kFold;
};

struct GkSelectOptions {
  GkApproxOptions sketch;
  // When rank k lands inside the pivot's duplicate band the answer is the
  // pivot itself; an empty candidate reduce still runs unless this is set.
  bool skip_redundant_reduce = false;
  std::uint64_t seed = 0;
};

struct PsrsOptions {
  std::size_t sample_per_partition = 0;  // 0 selects max(20, 2P)
  bool full_sort = false;                // sort every bucket, not just rank k's
  std::uint64_t seed = 0;
};

// Per-partition GK summaries, one collect, then the driver merge. The
// returned summary is the one gk_approx_quantile queries.
sketch::GkSummary gk_approx_summary(exec::Engine& engine,
                                    const exec::PartitionedDataset& ds,
                                    const GkApproxOptions& options = {});

// gk_approx_summary followed by a single query.
AlgoResult gk_approx_quantile(exec::Engine& engine,
                              const exec::PartitionedDataset& ds, double q,
                              const GkApproxOptions& options = {});

// Exact k-th smallest in three actions: sketch pivot, count below, pruned
// candidate reduce.
AlgoResult gk_select(exec::Engine& engine, const exec::PartitionedDataset& ds,
                     double q, const GkSelectOptions& options = {});

// Count-and-discard with tree-reduced counts and candidate pivots.
AlgoResult afs_select(exec::Engine& engine, const exec::PartitionedDataset& ds,
                      double q, std::uint64_t seed = 0);

// Same loop as afs_select with counts collected at the driver.
AlgoResult jeffers_select(exec::Engine& engine,
                          const exec::PartitionedDataset& ds, double q,
                          std::uint64_t seed = 0);

// Regular-sampling range partition followed by a local sort.
AlgoResult psrs_full_sort_quantile(exec::Engine& engine,
                                   const exec::PartitionedDataset& ds, double q,
                                   const PsrsOptions& options = {});

struct AlgoConfig {
  double epsilon = sketch::kDefaultEpsilon;
  sketch::GkVariant variant = sketch::GkVariant::kFixedBuffer;
  sketch::DriverMerge driver_merge = sketch::DriverMerge::kFold;
  std::uint64_t seed = 0;
  std::size_t sample_per_partition = 0;
  bool full_sort = true;
};

AlgoResult run_algorithm(Algorithm algorithm, exec::Engine& engine,
                         const exec::PartitionedDataset& ds, double q,
                         const AlgoConfig& config);

}  // namespace gks::algos
