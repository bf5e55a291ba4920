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
#include <string>
#include <string_view>
#include <vector>

#include "gkselect/algos/quantile.hpp"
#include "gkselect/bench/generate.hpp"

namespace gks::bench {

inline constexpr std::size_t kDefaultOracleLimit = 10'000'000;

// One cell of the benchmark grid.
struct TrialConfig {
  std::size_t n = 10'000;
  std::size_t partitions = 4;
  std::size_t workers = 1;
  algos::Algorithm algorithm = algos::Algorithm::kGkSelect;
  double q = 0.5;
  double epsilon = sketch::kDefaultEpsilon;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  Distribution distribution = Distribution::kUniformInt;
  sketch::GkVariant variant = sketch::GkVariant::kFixedBuffer;
  sketch::DriverMerge driver_merge = sketch::DriverMerge::kFold;
  bool full_sort = true;
  std::size_t oracle_limit = kDefaultOracleLimit;
  bool warmup = true;

  // Throws invalid-argument when trials, P, W, q or epsilon are out of range.
  void validate() const;
  algos::AlgoConfig algo_config(std::uint64_t trial_seed) const;
};

struct SuiteConfig {
  std::vector<algos::Algorithm> algorithms = {
      algos::Algorithm::kGkApprox, algos::Algorithm::kGkSelect,
      algos::Algorithm::kAfs, algos::Algorithm::kJeffers,
      algos::Algorithm::kFullSort};
  std::vector<std::size_t> sizes = {10'000};
  std::vector<std::size_t> partitions;  // empty: 4 * workers
  std::size_t workers = 0;              // 0: hardware concurrency
  double q = 0.5;
  double epsilon = sketch::kDefaultEpsilon;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  Distribution distribution = Distribution::kUniformInt;
  sketch::GkVariant variant = sketch::GkVariant::kFixedBuffer;
  sketch::DriverMerge driver_merge = sketch::DriverMerge::kFold;
  bool full_sort = true;
  std::size_t oracle_limit = kDefaultOracleLimit;
  bool warmup = true;
  std::string csv_out;
  std::string summary_out;

  std::size_t effective_workers() const;
  // Cells in (n, P, algorithm) order.
  std::vector<TrialConfig> expand() const;
};

// Accepts plain integers and integral scientific notation such as 1e6.
std::size_t parse_count(std::string_view text);
std::vector<std::size_t> parse_count_list(std::string_view text);
double parse_real(std::string_view text);
bool parse_bool(std::string_view text);
std::vector<algos::Algorithm> parse_algorithm_list(std::string_view text);

// Keys: algo, n, p, workers, q, eps, trials, seed, dist, csv-out,
// summary-out, oracle-limit, variant, driver-merge, full-sort, warmup.
// Underscores and dashes are interchangeable.
void apply_setting(SuiteConfig& config, std::string_view key,
                   std::string_view value);

// Flat key=value lines; '#' starts a comment. Errors name the line.
SuiteConfig parse_config(std::string_view text, SuiteConfig base = {});
SuiteConfig load_config_file(const std::string& path, SuiteConfig base = {});

}  // namespace gks::bench
