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

#include "gkselect/bench/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "gkselect/common/error.hpp"

namespace gks::bench {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty list");
  return out;
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  std::replace(out.begin(), out.end(), '_', '-');
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

[[noreturn]] void bad_value(std::string_view what, std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              "invalid " + std::string(what) + " '" + std::string(text) + "'");
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (partitions < 1) throw Error(ErrorCode::kInvalidArgument, "P must be >= 1");
  if (workers < 1) throw Error(ErrorCode::kInvalidArgument, "workers must be >= 1");
  if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "q must be in [0, 1]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eps must be in (0, 1)");
  }
}

algos::AlgoConfig TrialConfig::algo_config(std::uint64_t trial_seed) const {
  algos::AlgoConfig c;
  c.epsilon = epsilon;
  c.variant = variant;
  c.driver_merge = driver_merge;
  c.seed = trial_seed;
  c.full_sort = full_sort;
  return c;
}

std::size_t SuiteConfig::effective_workers() const {
  if (workers > 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialConfig> SuiteConfig::expand() const {
  const std::size_t w = effective_workers();
  const std::vector<std::size_t> ps =
      partitions.empty() ? std::vector<std::size_t>{4 * w} : partitions;
  std::vector<TrialConfig> cells;
  for (const auto n : sizes) {
    for (const auto p : ps) {
      for (const auto a : algorithms) {
        TrialConfig c;
        c.n = n;
        c.partitions = p;
        c.workers = w;
        c.algorithm = a;
        c.q = q;
        c.epsilon = epsilon;
        c.trials = trials;
        c.seed = seed;
        c.distribution = distribution;
        c.variant = variant;
        c.driver_merge = driver_merge;
        c.full_sort = full_sort;
        c.oracle_limit = oracle_limit;
        c.warmup = warmup;
        c.validate();
        cells.push_back(c);
      }
    }
  }
  return cells;
}

std::size_t parse_count(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc() && ptr == end) return v;

  double d = 0.0;
  auto [dptr, dec] = std::from_chars(text.data(), end, d);
  if (dec != std::errc() || dptr != end || !(d >= 0.0) || d > 0x1.0p53 ||
      std::floor(d) != d) {
    bad_value("count", text);
  }
  return static_cast<std::size_t>(d);
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto item : split_list(text)) out.push_back(parse_count(item));
  return out;
}

double parse_real(std::string_view text) {
  text = trim(text);
  double d = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, d);
  if (ec != std::errc() || ptr != end || !std::isfinite(d)) bad_value("number", text);
  return d;
}

bool parse_bool(std::string_view text) {
  text = trim(text);
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  bad_value("boolean", text);
}

std::vector<algos::Algorithm> parse_algorithm_list(std::string_view text) {
  const auto items = split_list(text);
  if (items.size() == 1 && items.front() == "all") return SuiteConfig{}.algorithms;
  std::vector<algos::Algorithm> out;
  for (const auto item : items) out.push_back(algos::parse_algorithm(item));
  return out;
}

void apply_setting(SuiteConfig& config, std::string_view raw_key,
                   std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view value = trim(raw_value);
  if (key == "algo" || key == "algorithm") {
    config.algorithms = parse_algorithm_list(value);
  } else if (key == "n") {
    config.sizes = parse_count_list(value);
  } else if (key == "p") {
    config.partitions = parse_count_list(value);
  } else if (key == "workers" || key == "w") {
    config.workers = parse_count(value);
  } else if (key == "q") {
    config.q = parse_real(value);
  } else if (key == "eps" || key == "epsilon") {
    config.epsilon = parse_real(value);
  } else if (key == "trials") {
    config.trials = parse_count(value);
  } else if (key == "seed") {
    config.seed = parse_count(value);
  } else if (key == "dist" || key == "distribution") {
    config.distribution = parse_distribution(value);
  } else if (key == "csv-out") {
    config.csv_out = std::string(value);
  } else if (key == "summary-out") {
    config.summary_out = std::string(value);
  } else if (key == "oracle-limit") {
    config.oracle_limit = parse_count(value);
  } else if (key == "variant") {
    config.variant = sketch::parse_variant(value);
  } else if (key == "driver-merge") {
    config.driver_merge = sketch::parse_driver_merge(value);
  } else if (key == "full-sort") {
    config.full_sort = parse_bool(value);
  } else if (key == "warmup") {
    config.warmup = parse_bool(value);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown setting '" + key + "'");
  }
}

SuiteConfig parse_config(std::string_view text, SuiteConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  return base;
}

SuiteConfig load_config_file(const std::string& path, SuiteConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

}  // namespace gks::bench
