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

#include "gkselect/bench/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "gkselect/common/error.hpp"

namespace gks::bench {
namespace {

using algos::Algorithm;

std::string format(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

const char* match_text(const std::optional<bool>& m) {
  if (!m) return "na";
  return *m ? "true" : "false";
}

// Stats every run of the algorithm must satisfy, independent of the data.
std::vector<std::string> check_invariants(const TrialConfig& c,
                                          const algos::AlgoResult& r) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(std::string(algos::to_string(c.algorithm)) + ": " + what);
  };
  const auto& s = r.stats;
  switch (c.algorithm) {
    case Algorithm::kGkApprox:
      expect(s.actions == 1, "actions != 1");
      expect(s.shuffle_stages == 0 && s.persists == 0, "unexpected shuffle or persist");
      break;
    case Algorithm::kGkSelect: {
      expect(s.actions == 3, "actions != 3");
      expect(s.shuffle_stages == 0, "shuffles != 0");
      expect(s.persists == 1, "persists != 1");
      const auto bound = static_cast<std::int64_t>(
          std::ceil(c.epsilon * static_cast<double>(c.n))) + 1;
      if (r.correction) {
        expect(std::llabs(r.correction->delta_k) <= bound, "|delta_k| exceeds eps*n");
      }
      expect(r.max_candidates_at_node <= r.candidate_cap,
             "candidate set exceeded its cap");
      break;
    }
    case Algorithm::kAfs:
    case Algorithm::kJeffers:
      expect(s.actions == r.rounds, "actions != rounds");
      expect(s.shuffle_stages == 0, "shuffles != 0");
      expect(r.rounds == 0 || s.persists == r.rounds - 1, "persists != rounds - 1");
      break;
    case Algorithm::kFullSort:
      expect(s.actions == 2, "actions != 2");
      expect(s.shuffle_stages == 1, "shuffles != 1");
      expect(s.persists == 0, "persists != 0");
      break;
  }
  return bad;
}

}  // namespace

SortOracle::SortOracle(std::span<const Value> data) : sorted_(data.begin(), data.end()) {
  std::sort(sorted_.begin(), sorted_.end());
}

Value SortOracle::kth(std::uint64_t k) const {
  if (k < 1 || k > sorted_.size()) throw Error(ErrorCode::kInvalidRank, "rank out of range");
  return sorted_[k - 1];
}

std::uint64_t SortOracle::rank_error(Value v, std::uint64_t k) const {
  const auto [lo, hi] = std::equal_range(sorted_.begin(), sorted_.end(), v);
  const auto first = static_cast<std::uint64_t>(lo - sorted_.begin()) + 1;
  const auto last = static_cast<std::uint64_t>(hi - sorted_.begin());
  if (first > last) {
    // Absent: v falls between ranks last and last + 1.
    return k <= last ? first - k : k - last;
  }
  if (k < first) return first - k;
  if (k > last) return k - last;
  return 0;
}

std::vector<double> TrialResult::wall_times() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const auto& t : trials) out.push_back(t.wall_ms);
  return out;
}

std::optional<bool> TrialResult::exact_match() const {
  std::optional<bool> all;
  for (const auto& t : trials) {
    if (!t.exact_match) continue;
    all = all.value_or(true) && *t.exact_match;
  }
  return all;
}

TrialResult run_trial(const TrialConfig& config, std::span<const Value> data,
                      const SortOracle* oracle) {
  config.validate();
  TrialResult result;
  result.config = config;

  if (data.empty()) {
    // The only correct outcome on an empty dataset is an empty-input error.
    exec::Engine engine(config.workers);
    auto ds = exec::make_dataset(data, config.partitions);
    try {
      algos::run_algorithm(config.algorithm, engine, ds, config.q,
                           config.algo_config(config.seed));
      ++result.invariant_violations;
      result.messages.push_back("empty dataset did not raise empty-input");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyInput) {
        ++result.invariant_violations;
        result.messages.push_back(e.what());
      }
    }
    for (std::size_t t = 0; t < config.trials; ++t) {
      TrialRecord rec;
      rec.trial = t;
      result.trials.push_back(rec);
    }
    return result;
  }

  const auto ds = exec::make_dataset(data, config.partitions);
  const std::uint64_t k = target_rank(config.q, data.size());
  if (oracle) result.oracle_value = oracle->kth(k);
  const auto approx_slack = static_cast<std::uint64_t>(
      std::floor(config.epsilon * static_cast<double>(data.size())));

  exec::Engine engine(config.workers);
  auto run_once = [&](std::uint64_t trial_seed, double* wall_ms) {
    engine.reset_stats();
    const auto start = std::chrono::steady_clock::now();
    auto r = algos::run_algorithm(config.algorithm, engine, ds, config.q,
                                  config.algo_config(trial_seed));
    const auto stop = std::chrono::steady_clock::now();
    if (wall_ms) {
      *wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    return r;
  };

  if (config.warmup) run_once(mix_seed(config.seed, ~std::uint64_t{0}), nullptr);

  for (std::size_t t = 0; t < config.trials; ++t) {
    TrialRecord rec;
    rec.trial = t;
    const auto r = run_once(mix_seed(config.seed, t), &rec.wall_ms);
    rec.value = r.value;
    rec.stats = r.stats;
    rec.rounds = r.rounds;
    if (oracle) {
      if (algos::is_exact(config.algorithm)) {
        rec.exact_match = r.value == *result.oracle_value;
      } else {
        rec.exact_match = oracle->rank_error(r.value, k) <= approx_slack;
      }
      if (!*rec.exact_match) {
        ++result.exactness_mismatches;
        result.messages.push_back("trial " + std::to_string(t) + ": value " +
                                  std::to_string(r.value) + " does not match oracle " +
                                  std::to_string(*result.oracle_value));
      }
    }
    for (auto& msg : check_invariants(config, r)) {
      ++result.invariant_violations;
      result.messages.push_back("trial " + std::to_string(t) + ": " + msg);
    }
    result.value = r.value;
    result.stats = r.stats;
    result.rounds = r.rounds;
    result.trials.push_back(rec);
  }

  double sum = 0.0;
  for (const auto& t : result.trials) sum += t.wall_ms;
  result.mean_wall_ms = sum / static_cast<double>(result.trials.size());
  if (result.trials.size() > 1) {
    double ss = 0.0;
    for (const auto& t : result.trials) {
      ss += (t.wall_ms - result.mean_wall_ms) * (t.wall_ms - result.mean_wall_ms);
    }
    result.stddev_wall_ms =
        std::sqrt(ss / static_cast<double>(result.trials.size() - 1));
  }
  return result;
}

std::vector<TrialResult> run_suite(const SuiteConfig& config, std::ostream* trial_csv,
                                   const ProgressFn& progress) {
  const auto cells = config.expand();
  if (trial_csv) *trial_csv << kTrialCsvHeader << '\n';

  std::vector<TrialResult> results;
  std::optional<std::size_t> current_n;
  Segment data;
  std::optional<SortOracle> oracle;
  for (const auto& cell : cells) {
    if (current_n != cell.n) {
      current_n = cell.n;
      oracle.reset();
      data = generate(cell.distribution, cell.n, cell.seed);
      if (cell.n > 0 && cell.n <= cell.oracle_limit) oracle.emplace(data);
    }
    results.push_back(run_trial(cell, data, oracle ? &*oracle : nullptr));
    if (trial_csv) {
      write_trial_rows(*trial_csv, results.back());
      trial_csv->flush();
    }
    if (progress) progress(results.back());
  }
  return results;
}

void write_trial_rows(std::ostream& out, const TrialResult& r) {
  const auto& c = r.config;
  for (const auto& t : r.trials) {
    out << algos::to_string(c.algorithm) << ',' << c.n << ',' << c.partitions << ','
        << format("%.6g", c.q) << ',' << format("%.6g", c.epsilon) << ',' << c.seed
        << ',' << t.trial << ',' << format("%.3f", t.wall_ms) << ',' << t.stats.actions
        << ',' << t.stats.shuffle_stages << ',' << t.stats.persists << ',' << t.rounds
        << ',' << match_text(t.exact_match) << '\n';
  }
}

void write_summary(std::ostream& out, const std::vector<TrialResult>& results) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& r : results) {
    const auto& c = r.config;
    out << algos::to_string(c.algorithm) << ',' << c.n << ',' << c.partitions << ','
        << r.trials.size() << ',' << format("%.3f", r.mean_wall_ms) << ','
        << format("%.3f", r.stddev_wall_ms) << ',' << r.stats.actions << ','
        << r.stats.shuffle_stages << ',' << r.stats.persists << ',' << r.rounds << ','
        << match_text(r.exact_match()) << ',' << r.invariant_violations << '\n';
  }
}

}  // namespace gks::bench
