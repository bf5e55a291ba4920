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

#include "gkselect/sketch/gk_sketch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gkselect/common/error.hpp"

namespace gks::sketch {

std::string_view to_string(GkVariant v) {
  switch (v) {
    case GkVariant::kClassical: return "classical";
    case GkVariant::kFixedBuffer: return "fixed_buffer";
    case GkVariant::kGrowingBuffer: return "growing_buffer";
  }
  return "unknown";
}

GkVariant parse_variant(std::string_view name) {
  if (name == "classical") return GkVariant::kClassical;
  if (name == "fixed_buffer" || name == "fixed") return GkVariant::kFixedBuffer;
  if (name == "growing_buffer" || name == "growing") return GkVariant::kGrowingBuffer;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown GK variant '" + std::string(name) + "'");
}

BufferedGkConfig BufferedGkConfig::for_variant(GkVariant v) {
  switch (v) {
    case GkVariant::kClassical: return classical();
    case GkVariant::kFixedBuffer: return fixed_buffer();
    case GkVariant::kGrowingBuffer: return growing_buffer();
  }
  return fixed_buffer();
}

GkSketch::GkSketch(double epsilon, BufferedGkConfig config)
    : summary_(epsilon), config_(config) {
  switch (config_.mode) {
    case GkVariant::kClassical:
      break;
    case GkVariant::kFixedBuffer:
      if (config_.head_size == 0) {
        throw Error(ErrorCode::kInvalidArgument, "head buffer size must be >= 1");
      }
      head_capacity_ = config_.head_size;
      break;
    case GkVariant::kGrowingBuffer:
      if (!(config_.growth_factor > 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "growth factor must exceed 1");
      }
      // Start at the natural scale of the summary, ceil(alpha / epsilon).
      head_capacity_ = std::max<std::size_t>(
          std::max<std::size_t>(config_.head_size, 1),
          static_cast<std::size_t>(std::ceil(config_.growth_factor / epsilon)));
      break;
  }
  head_.reserve(head_capacity_);
}

void GkSketch::insert(Value x) {
  if (config_.mode == GkVariant::kClassical) {
    summary_.insert(x);
    return;
  }
  head_.push_back(x);
  if (head_.size() >= head_capacity_) flush();
}

void GkSketch::flush() {
  if (config_.mode == GkVariant::kClassical || head_.empty()) return;

  std::sort(head_.begin(), head_.end());
  const std::uint64_t b = head_.size();
  work_.sort_work += b * static_cast<std::uint64_t>(std::bit_width(b));
  work_.merge_work += b + summary_.size();
  ++work_.flushes;
  summary_.insert_sorted(head_);
  head_.clear();

  if (summary_.size() > config_.compress_threshold) summary_.compress();

  if (config_.mode == GkVariant::kGrowingBuffer) {
    head_capacity_ = std::max<std::size_t>(
        std::max<std::size_t>(config_.head_size, 1),
        static_cast<std::size_t>(
            std::ceil(config_.growth_factor * static_cast<double>(summary_.size()))));
    head_.reserve(head_capacity_);
  }
}

SketchWork GkSketch::work() const noexcept {
  SketchWork w = work_;
  w.compress_work = summary_.compress_work();
  return w;
}

GkSummary GkSketch::finish() && {
  flush();
  return std::move(summary_);
}

GkSummary GkSketch::finish() & {
  flush();
  return summary_;
}

GkSummary build_summary(std::span<const Value> values, double epsilon,
                        const BufferedGkConfig& config) {
  GkSketch sketch(epsilon, config);
  for (Value v : values) sketch.insert(v);
  return std::move(sketch).finish();
}

}  // namespace gks::sketch
