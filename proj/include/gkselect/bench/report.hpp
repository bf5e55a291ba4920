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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkselect/bench/suite.hpp"

namespace gks::bench {

struct SpeedupRow {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t partitions = 0;
  double mean_ms = 0.0;
  std::optional<double> full_sort_ms;
  std::optional<double> speedup;  // full_sort_ms / mean_ms
};

struct SpeedupReport {
  std::vector<SpeedupRow> rows;
  std::vector<std::string> warnings;
};

// Mean times keyed by (algorithm, n, P). Cells without a full_sort partner
// (or with a non-positive time) get a blank ratio and a warning.
SpeedupReport report_speedup(const std::vector<TrialResult>& results);

// Reads either the per-trial CSV (wall_ms column, averaged per cell) or the
// summary CSV (mean_ms column). Throws invalid-argument on malformed input.
SpeedupReport report_speedup(std::istream& csv);

void write_speedup(std::ostream& out, const SpeedupReport& report);

}  // namespace gks::bench
