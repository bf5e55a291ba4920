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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkselect/bench/config.hpp"

namespace gks::bench {

// Sorted copy of a dataset used to verify results.
class SortOracle {
 public:
  explicit SortOracle(std::span<const Value> data);

  std::size_t size() const noexcept { return sorted_.size(); }
  Value kth(std::uint64_t k) const;  // 1-based
  // Distance from k to the 1-based rank interval occupied by v; 0 when v
  // may legitimately be reported for rank k.
  std::uint64_t rank_error(Value v, std::uint64_t k) const;

 private:
  Segment sorted_;
};

struct TrialRecord {
  std::size_t trial = 0;
  double wall_ms = 0.0;
  Value value = 0;
  exec::ExecStats stats;
  std::size_t rounds = 0;
  std::optional<bool> exact_match;  // unset when no oracle ran
};

struct TrialResult {
  TrialConfig config;
  std::vector<TrialRecord> trials;
  double mean_wall_ms = 0.0;
  double stddev_wall_ms = 0.0;
  std::optional<Value> value;         // from the last trial
  std::optional<Value> oracle_value;  // when n <= oracle_limit
  exec::ExecStats stats;              // from the last trial
  std::size_t rounds = 0;
  std::size_t invariant_violations = 0;
  std::size_t exactness_mismatches = 0;
  std::vector<std::string> messages;

  std::vector<double> wall_times() const;
  // All trials matched, no trial matched, or no oracle ran.
  std::optional<bool> exact_match() const;
  bool passed() const noexcept {
    return invariant_violations == 0 && exactness_mismatches == 0;
  }
};

// Runs one grid cell on `data`; `oracle` may be null.
TrialResult run_trial(const TrialConfig& config, std::span<const Value> data,
                      const SortOracle* oracle);

using ProgressFn = std::function<void(const TrialResult&)>;

// Generates each dataset once per n, times only the algorithm call, and
// writes one CSV row per trial when `trial_csv` is given.
std::vector<TrialResult> run_suite(const SuiteConfig& config,
                                   std::ostream* trial_csv = nullptr,
                                   const ProgressFn& progress = {});

inline constexpr const char* kTrialCsvHeader =
    "algorithm,n,P,q,eps,seed,trial,wall_ms,actions,shuffles,persists,rounds,"
    "exact_match";
inline constexpr const char* kSummaryCsvHeader =
    "algorithm,n,P,trials,mean_ms,stddev_ms,actions,shuffles,persists,rounds,"
    "exact_match,violations";

void write_trial_rows(std::ostream& out, const TrialResult& result);
void write_summary(std::ostream& out, const std::vector<TrialResult>& results);

}  // namespace gks::bench
