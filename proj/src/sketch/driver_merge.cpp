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

#include "gkselect/sketch/driver_merge.hpp"

#include <string>

#include "gkselect/common/error.hpp"

namespace gks::sketch {
namespace {

void require_input(std::span<const GkSummary> summaries) {
  if (summaries.empty()) {
    throw Error(ErrorCode::kEmptyReduce, "no summaries to merge");
  }
}

GkSummary merge_range(std::span<const GkSummary> s, std::size_t& calls) {
  if (s.size() == 1) return s.front();
  const std::size_t mid = s.size() / 2;
  GkSummary left = merge_range(s.first(mid), calls);
  GkSummary right = merge_range(s.subspan(mid), calls);
  ++calls;
  return merge_summaries(left, right);
}

}  // namespace

std::string_view to_string(DriverMerge m) {
  return m == DriverMerge::kFold ? "fold" : "tree";
}

DriverMerge parse_driver_merge(std::string_view name) {
  if (name == "fold") return DriverMerge::kFold;
  if (name == "tree") return DriverMerge::kTree;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown driver merge '" + std::string(name) + "'");
}

DriverMergeResult driver_merge_fold(std::span<const GkSummary> summaries) {
  require_input(summaries);
  DriverMergeResult out{summaries.front(), 0};
  for (std::size_t i = 1; i < summaries.size(); ++i) {
    out.summary = merge_summaries(out.summary, summaries[i]);
    ++out.merge_calls;
  }
  return out;
}

DriverMergeResult driver_merge_tree(std::span<const GkSummary> summaries) {
  require_input(summaries);
  std::size_t calls = 0;
  GkSummary merged = merge_range(summaries, calls);
  return {std::move(merged), calls};
}

DriverMergeResult driver_merge(std::span<const GkSummary> summaries,
                               DriverMerge strategy) {
  return strategy == DriverMerge::kFold ? driver_merge_fold(summaries)
                                        : driver_merge_tree(summaries);
}

}  // namespace gks::sketch
