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

#include "gkselect/exec/exec_stats.hpp"

#include <ostream>

#include "gkselect/common/error.hpp"

namespace gks::exec {

ExecStats operator-(const ExecStats& after, const ExecStats& before) {
  ExecStats d;
  d.actions = after.actions - before.actions;
  d.shuffle_stages = after.shuffle_stages - before.shuffle_stages;
  d.persists = after.persists - before.persists;
  d.broadcast_elements = after.broadcast_elements - before.broadcast_elements;
  d.collected_elements = after.collected_elements - before.collected_elements;
  d.tree_reduce_merges = after.tree_reduce_merges - before.tree_reduce_merges;
  d.comparisons = after.comparisons - before.comparisons;
  d.shuffled_records = after.shuffled_records - before.shuffled_records;
  d.persisted_records = after.persisted_records - before.persisted_records;
  d.tree_transfer_elements =
      after.tree_transfer_elements - before.tree_transfer_elements;
  return d;
}

std::ostream& operator<<(std::ostream& os, const ExecStats& s) {
  return os << "{actions=" << s.actions << " shuffles=" << s.shuffle_stages
            << " persists=" << s.persists
            << " broadcast=" << s.broadcast_elements
            << " collected=" << s.collected_elements
            << " tree_merges=" << s.tree_reduce_merges
            << " tree_transfer=" << s.tree_transfer_elements
            << " shuffled=" << s.shuffled_records
            << " persisted=" << s.persisted_records
            << " comparisons=" << s.comparisons << "}";
}

double estimate_latency(const ExecStats& stats, const CostModel& model) {
  if (model.latency < 0 || model.per_element < 0 || model.hop_factor < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cost model parameters must be non-negative");
  }
  const auto direct = static_cast<double>(stats.collected_elements +
                                          stats.broadcast_elements +
                                          stats.shuffled_records);
  return model.latency * static_cast<double>(stats.actions) +
         model.per_element * direct +
         model.per_element * model.hop_factor *
             static_cast<double>(stats.tree_transfer_elements);
}

}  // namespace gks::exec
