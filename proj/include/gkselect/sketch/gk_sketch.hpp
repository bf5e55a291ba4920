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
#include <string_view>

#include "gkselect/common/types.hpp"
#include "gkselect/sketch/gk_summary.hpp"

namespace gks::sketch {

enum class GkVariant {
  kClassical,      // per-element insert, periodic compress
  kFixedBuffer,    // Spark-style head buffer of fixed size
  kGrowingBuffer,  // head buffer resized to ceil(alpha * |S|) after each flush
};

std::string_view to_string(GkVariant v);
GkVariant parse_variant(std::string_view name);

inline constexpr std::size_t kDefaultHeadSize = 50000;
inline constexpr std::size_t kDefaultCompressThreshold = 10000;
inline constexpr double kDefaultGrowthFactor = 2.0;

struct BufferedGkConfig {
  GkVariant mode = GkVariant::kFixedBuffer;
  std::size_t head_size = kDefaultHeadSize;
  std::size_t compress_threshold = kDefaultCompressThreshold;
  double growth_factor = kDefaultGrowthFactor;

  static BufferedGkConfig classical() { return {GkVariant::kClassical, 0, 0, 0.0}; }
  static BufferedGkConfig fixed_buffer() { return {}; }
  // Compresses after every flush; head_size is only the lower clamp for the
  // buffer capacity.
  static BufferedGkConfig growing_buffer(double alpha = kDefaultGrowthFactor) {
    return {GkVariant::kGrowingBuffer, 1, 0, alpha};
  }
  static BufferedGkConfig for_variant(GkVariant v);
};

// Work counters, in elements touched.
struct SketchWork {
  std::uint64_t flushes = 0;
  std::uint64_t merge_work = 0;     // buffer + summary entries per flush merge
  std::uint64_t compress_work = 0;  // entries scanned by compress
  std::uint64_t sort_work = 0;      // B * ceil(log2 B) per flushed buffer

  std::uint64_t flush_and_compress() const noexcept {
    return merge_work + compress_work;
  }
};

// Streaming builder over one of the three variants. In the buffered modes
// values land in a head buffer and reach the summary on flush(); query the
// summary only after a final flush (finish() does that).
class GkSketch {
 public:
  explicit GkSketch(double epsilon = kDefaultEpsilon,
                    BufferedGkConfig config = BufferedGkConfig::fixed_buffer());

  void insert(Value x);
  void flush();

  // Flushes and hands back the summary.
  GkSummary finish() &&;
  GkSummary finish() &;

  const GkSummary& summary() const noexcept { return summary_; }
  const BufferedGkConfig& config() const noexcept { return config_; }
  std::size_t head_capacity() const noexcept { return head_capacity_; }
  std::size_t buffered() const noexcept { return head_.size(); }
  std::uint64_t count() const noexcept { return summary_.count() + head_.size(); }
  SketchWork work() const noexcept;

 private:
  GkSummary summary_;
  BufferedGkConfig config_;
  Segment head_;
  std::size_t head_capacity_ = 0;
  SketchWork work_;
};

// Builds a finished summary over `values` with the given variant.
GkSummary build_summary(std::span<const Value> values, double epsilon,
                        const BufferedGkConfig& config);

}  // namespace gks::sketch
