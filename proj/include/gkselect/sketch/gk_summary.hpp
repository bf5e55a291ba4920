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
#include <optional>
#include <span>
#include <vector>

#include "gkselect/common/types.hpp"

namespace gks::sketch {

inline constexpr double kDefaultEpsilon = 0.01;

// One summary entry. `g` is the rank gap to the previous entry, `delta` the
// amount by which the entry's maximum rank can exceed its minimum rank.
struct GkTuple {
  Value value = 0;
  std::uint64_t g = 0;
  std::uint64_t delta = 0;

  friend bool operator==(const GkTuple&, const GkTuple&) = default;
};

// Greenwald-Khanna epsilon-approximate quantile summary over int64 values.
//
// Entries are kept in a dynamic array sorted by value. For every entry
// g + delta <= floor(2 * epsilon * count) holds, which bounds the rank
// error of query() by epsilon * count.
class GkSummary {
 public:
  explicit GkSummary(double epsilon = kDefaultEpsilon);

  double epsilon() const noexcept { return epsilon_; }
  std::uint64_t count() const noexcept { return count_; }
  std::span<const GkTuple> tuples() const noexcept { return tuples_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return count_ == 0; }
  std::size_t payload_size() const noexcept { return tuples_.size(); }

  // floor(2 * epsilon * count): the cap on g + delta.
  std::uint64_t error_band() const noexcept;

  // Classical streaming insert: the new entry gets g = 1 and
  // delta = g_succ + delta_succ - 1 (zero at either end of the summary).
  // Every ceil(1 / (2 epsilon)) inserts a compress runs.
  void insert(Value x);

  // Merges an ascending batch into the entry list in one linear pass, with
  // the same per-value delta rule as insert(). Does not compress.
  void insert_sorted(std::span<const Value> sorted);

  // Right-to-left sweep folding entry i into its successor while
  // g_i + g_{i+1} + delta_{i+1} <= error_band(). The first and last entries
  // always survive.
  void compress();

  // Value whose rank is within epsilon * count of max(1, ceil(q * count)).
  // Throws empty-summary on an empty summary.
  Value query(double q) const;
  Value query_rank(std::uint64_t k) const;

  // Counters for cost accounting.
  std::uint64_t compress_calls() const noexcept { return compress_calls_; }
  std::uint64_t compress_work() const noexcept { return compress_work_; }

  // Flat little-endian record stream: count, epsilon, tuple count, then
  // (value, g, delta) triples.
  std::vector<std::byte> serialize() const;
  static GkSummary deserialize(std::span<const std::byte> bytes);

  friend GkSummary merge_summaries(const GkSummary& a, const GkSummary& b);

 private:
  double epsilon_;
  std::uint64_t count_ = 0;
  std::vector<GkTuple> tuples_;
  std::uint64_t compress_period_;
  std::uint64_t until_compress_;
  std::uint64_t compress_calls_ = 0;
  std::uint64_t compress_work_ = 0;
};

// Combined summary of both inputs with rank error <= epsilon*(n_a + n_b).
// An entry taken from one side has its delta widened by g + delta - 1 of
// the next entry of the other side, then the result is compressed.
// Throws invalid-merge when the epsilons differ.
GkSummary merge_summaries(const GkSummary& a, const GkSummary& b);

// (1/epsilon) * log2(epsilon * n) + 1, defined only for epsilon * n > 1.
std::optional<double> size_bound(double epsilon, std::uint64_t n);

}  // namespace gks::sketch
