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

#include <string>

#include "gkselect/algos/quantile.hpp"

namespace gks::algos {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kGkApprox: return "gk_approx";
    case Algorithm::kGkSelect: return "gk_select";
    case Algorithm::kAfs: return "afs";
    case Algorithm::kJeffers: return "jeffers";
    case Algorithm::kFullSort: return "full_sort";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "gk_approx" || name == "gk_sketch") return Algorithm::kGkApprox;
  if (name == "gk_select") return Algorithm::kGkSelect;
  if (name == "afs") return Algorithm::kAfs;
  if (name == "jeffers") return Algorithm::kJeffers;
  if (name == "full_sort" || name == "psrs") return Algorithm::kFullSort;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown algorithm '" + std::string(name) + "'");
}

bool is_exact(Algorithm a) { return a != Algorithm::kGkApprox; }

AlgoResult run_algorithm(Algorithm algorithm, exec::Engine& engine,
                         const exec::PartitionedDataset& ds, double q,
                         const AlgoConfig& config) {
  const GkApproxOptions sketch{config.epsilon, config.variant, config.driver_merge};
  switch (algorithm) {
    case Algorithm::kGkApprox:
      return gk_approx_quantile(engine, ds, q, sketch);
    case Algorithm::kGkSelect:
      return gk_select(engine, ds, q, GkSelectOptions{sketch, false, config.seed});
    case Algorithm::kAfs:
      return afs_select(engine, ds, q, config.seed);
    case Algorithm::kJeffers:
      return jeffers_select(engine, ds, q, config.seed);
    case Algorithm::kFullSort:
      return psrs_full_sort_quantile(
          engine, ds, q,
          PsrsOptions{config.sample_per_partition, config.full_sort, config.seed});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

}  // namespace gks::algos
