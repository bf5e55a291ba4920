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
#include <span>
#include <string_view>

#include "gkselect/sketch/gk_summary.hpp"

namespace gks::sketch {

enum class DriverMerge {
  kFold,  // left-to-right pairwise merge
  kTree,  // recursive pairwise halves, all on the driver
};

std::string_view to_string(DriverMerge m);
DriverMerge parse_driver_merge(std::string_view name);

struct DriverMergeResult {
  GkSummary summary;
  std::size_t merge_calls = 0;
};

// Both throw empty-reduce on an empty input and make exactly P - 1 calls to
// merge_summaries.
DriverMergeResult driver_merge_fold(std::span<const GkSummary> summaries);
DriverMergeResult driver_merge_tree(std::span<const GkSummary> summaries);
DriverMergeResult driver_merge(std::span<const GkSummary> summaries,
                               DriverMerge strategy);

}  // namespace gks::sketch
