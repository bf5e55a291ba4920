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

#include "gkselect/bench/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "gkselect/common/error.hpp"

namespace gks::bench {
namespace {

using CellKey = std::tuple<std::string, std::size_t, std::size_t>;

struct Mean {
  double sum = 0.0;
  std::size_t count = 0;
  double value() const { return sum / static_cast<double>(count); }
};

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

SpeedupReport build(const std::map<CellKey, Mean>& means) {
  SpeedupReport report;
  for (const auto& [key, mean] : means) {
    const auto& [algo, n, p] = key;
    if (algo == "full_sort") continue;
    SpeedupRow row{algo, n, p, mean.value(), std::nullopt, std::nullopt};
    const auto partner = means.find(CellKey{"full_sort", n, p});
    const std::string cell = algo + " at n=" + std::to_string(n) + ", P=" + std::to_string(p);
    if (partner == means.end()) {
      report.warnings.push_back("no full_sort time for " + cell);
    } else {
      row.full_sort_ms = partner->second.value();
      if (row.mean_ms > 0.0 && *row.full_sort_ms > 0.0) {
        row.speedup = *row.full_sort_ms / row.mean_ms;
      } else {
        report.warnings.push_back("non-positive time for " + cell);
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace

SpeedupReport report_speedup(const std::vector<TrialResult>& results) {
  std::map<CellKey, Mean> means;
  for (const auto& r : results) {
    if (r.trials.empty()) continue;
    auto& m = means[CellKey{std::string(algos::to_string(r.config.algorithm)),
                            r.config.n, r.config.partitions}];
    m.sum += r.mean_wall_ms * static_cast<double>(r.trials.size());
    m.count += r.trials.size();
  }
  return build(means);
}

SpeedupReport report_speedup(std::istream& csv) {
  std::string line;
  if (!std::getline(csv, line)) throw Error(ErrorCode::kInvalidArgument, "empty csv");
  const auto header = split_row(line);
  auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const auto algo_col = column("algorithm");
  const auto n_col = column("n");
  const auto p_col = column("P");
  auto time_col = column("wall_ms");
  if (!time_col) time_col = column("mean_ms");
  if (!algo_col || !n_col || !p_col || !time_col) {
    throw Error(ErrorCode::kInvalidArgument,
                "csv needs algorithm, n, P and wall_ms or mean_ms columns");
  }

  std::map<CellKey, Mean> means;
  std::size_t line_no = 1;
  while (std::getline(csv, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_row(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "csv line " + std::to_string(line_no) + ": wrong field count");
    }
    try {
      auto& m = means[CellKey{fields[*algo_col], parse_count(fields[*n_col]),
                              parse_count(fields[*p_col])}];
      m.sum += parse_real(fields[*time_col]);
      ++m.count;
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "csv line " + std::to_string(line_no) + ": " + e.message());
    }
  }
  return build(means);
}

void write_speedup(std::ostream& out, const SpeedupReport& report) {
  out << "algorithm,n,P,mean_ms,full_sort_ms,speedup\n";
  char buf[64];
  for (const auto& r : report.rows) {
    out << r.algorithm << ',' << r.n << ',' << r.partitions << ',';
    std::snprintf(buf, sizeof buf, "%.3f", r.mean_ms);
    out << buf << ',';
    if (r.full_sort_ms) {
      std::snprintf(buf, sizeof buf, "%.3f", *r.full_sort_ms);
      out << buf;
    }
    out << ',';
    if (r.speedup) {
      std::snprintf(buf, sizeof buf, "%.3f", *r.speedup);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace gks::bench
