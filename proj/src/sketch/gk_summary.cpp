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

#include "gkselect/sketch/gk_summary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "gkselect/common/error.hpp"
#include "gkselect/common/rank.hpp"

namespace gks::sketch {
namespace {

std::uint64_t compress_period_for(double epsilon) {
  return static_cast<std::uint64_t>(std::ceil(1.0 / (2.0 * epsilon)));
}

void put_u64(std::vector<std::byte>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::byte>((v >> (8 * i)) & 0xff));
  }
}

std::uint64_t get_u64(std::span<const std::byte> in, std::size_t& pos) {
  if (in.size() - pos < 8) {
    throw Error(ErrorCode::kCorruptData, "truncated summary record");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  }
  pos += 8;
  return v;
}

}  // namespace

GkSummary::GkSummary(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  compress_period_ = compress_period_for(epsilon);
  until_compress_ = compress_period_;
}

std::uint64_t GkSummary::error_band() const noexcept {
  return static_cast<std::uint64_t>(
      std::floor(2.0 * epsilon_ * static_cast<double>(count_)));
}

void GkSummary::insert(Value x) {
  const auto pos = std::upper_bound(
      tuples_.begin(), tuples_.end(), x,
      [](Value v, const GkTuple& t) { return v < t.value; });
  std::uint64_t delta = 0;
  if (pos != tuples_.begin() && pos != tuples_.end()) {
    delta = pos->g + pos->delta - 1;
  }
  tuples_.insert(pos, GkTuple{x, 1, delta});
  ++count_;
  if (--until_compress_ == 0) {
    compress();
    until_compress_ = compress_period_;
  }
}

void GkSummary::insert_sorted(std::span<const Value> sorted) {
  if (sorted.empty()) return;
  std::vector<GkTuple> merged;
  merged.reserve(tuples_.size() + sorted.size());
  std::size_t i = 0;
  for (Value x : sorted) {
    while (i < tuples_.size() && tuples_[i].value <= x) {
      merged.push_back(tuples_[i++]);
    }
    std::uint64_t delta = 0;
    if (!merged.empty() && i < tuples_.size()) {
      delta = tuples_[i].g + tuples_[i].delta - 1;
    }
    merged.push_back(GkTuple{x, 1, delta});
  }
  merged.insert(merged.end(), tuples_.begin() + static_cast<std::ptrdiff_t>(i),
                tuples_.end());
  tuples_ = std::move(merged);
  count_ += sorted.size();
}

void GkSummary::compress() {
  ++compress_calls_;
  compress_work_ += tuples_.size();
  if (tuples_.size() < 3) return;
  const std::uint64_t band = error_band();

  // Sweep from the right. `head` is the entry currently absorbing its
  // predecessors; entries are written back-to-front into the same array.
  std::size_t write = tuples_.size() - 1;
  GkTuple head = tuples_.back();
  for (std::size_t i = tuples_.size() - 2; i >= 1; --i) {
    const GkTuple& t = tuples_[i];
    if (t.g + head.g + head.delta <= band) {
      head.g += t.g;
    } else {
      tuples_[write--] = head;
      head = t;
    }
  }
  tuples_[write] = head;
  // tuples_[0] stays in place; close the gap between it and `write`.
  tuples_.erase(tuples_.begin() + 1,
                tuples_.begin() + static_cast<std::ptrdiff_t>(write));
}

Value GkSummary::query(double q) const {
  if (empty()) throw Error(ErrorCode::kEmptySummary, "query on empty summary");
  return query_rank(target_rank(q, count_));
}

Value GkSummary::query_rank(std::uint64_t k) const {
  if (empty()) throw Error(ErrorCode::kEmptySummary, "query on empty summary");
  // The extremes are stored exactly.
  if (k <= 1) return tuples_.front().value;
  if (k >= count_) return tuples_.back().value;

  const double limit =
      static_cast<double>(k) + epsilon_ * static_cast<double>(count_);
  std::uint64_t min_rank = 0;
  for (std::size_t i = 0; i < tuples_.size(); ++i) {
    min_rank += tuples_[i].g;
    if (static_cast<double>(min_rank + tuples_[i].delta) > limit) {
      return tuples_[i == 0 ? 0 : i - 1].value;
    }
  }
  return tuples_.back().value;
}

std::vector<std::byte> GkSummary::serialize() const {
  std::vector<std::byte> out;
  out.reserve(24 + 24 * tuples_.size());
  put_u64(out, count_);
  put_u64(out, std::bit_cast<std::uint64_t>(epsilon_));
  put_u64(out, tuples_.size());
  for (const auto& t : tuples_) {
    put_u64(out, static_cast<std::uint64_t>(t.value));
    put_u64(out, t.g);
    put_u64(out, t.delta);
  }
  return out;
}

GkSummary GkSummary::deserialize(std::span<const std::byte> bytes) {
  std::size_t pos = 0;
  const std::uint64_t count = get_u64(bytes, pos);
  const double epsilon = std::bit_cast<double>(get_u64(bytes, pos));
  const std::uint64_t size = get_u64(bytes, pos);
  if (size > (bytes.size() - pos) / 24 || (bytes.size() - pos) != size * 24) {
    throw Error(ErrorCode::kCorruptData, "tuple count does not match payload");
  }
  GkSummary s(epsilon);
  s.tuples_.reserve(size);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i < size; ++i) {
    GkTuple t;
    t.value = static_cast<Value>(get_u64(bytes, pos));
    t.g = get_u64(bytes, pos);
    t.delta = get_u64(bytes, pos);
    if (!s.tuples_.empty() && t.value < s.tuples_.back().value) {
      throw Error(ErrorCode::kCorruptData, "tuples out of order");
    }
    total += t.g;
    s.tuples_.push_back(t);
  }
  if (total != count) {
    throw Error(ErrorCode::kCorruptData, "sum of gaps differs from count");
  }
  s.count_ = count;
  return s;
}

GkSummary merge_summaries(const GkSummary& a, const GkSummary& b) {
  if (a.epsilon_ != b.epsilon_) {
    throw Error(ErrorCode::kInvalidMerge,
                "cannot merge summaries with different epsilon");
  }
  if (b.empty()) return a;
  if (a.empty()) return b;

  GkSummary out(a.epsilon_);
  out.count_ = a.count_ + b.count_;
  out.tuples_.reserve(a.size() + b.size());
  const auto& ta = a.tuples_;
  const auto& tb = b.tuples_;
  std::size_t i = 0;
  std::size_t j = 0;
  // An entry from one side may sit anywhere between the neighbouring entries
  // of the other side, so its max rank grows by that neighbour's
  // g + delta - 1. Ties take the `a` entry first.
  while (i < ta.size() || j < tb.size()) {
    const bool take_a = j == tb.size() || (i < ta.size() && ta[i].value <= tb[j].value);
    GkTuple t = take_a ? ta[i++] : tb[j++];
    if (take_a && j < tb.size()) {
      t.delta += tb[j].g + tb[j].delta - 1;
    } else if (!take_a && i < ta.size()) {
      t.delta += ta[i].g + ta[i].delta - 1;
    }
    out.tuples_.push_back(t);
  }
  out.compress();
  return out;
}

std::optional<double> size_bound(double epsilon, std::uint64_t n) {
  const double en = epsilon * static_cast<double>(n);
  if (!(en > 1.0)) return std::nullopt;
  return std::log2(en) / epsilon + 1.0;
}

}  // namespace gks::sketch
