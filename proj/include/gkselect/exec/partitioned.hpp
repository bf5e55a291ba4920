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

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

#include "gkselect/common/error.hpp"
#include "gkselect/common/types.hpp"

namespace gks::exec {

template <class T>
concept HasPayloadSize = requires(const T& t) {
  { t.payload_size() } -> std::convertible_to<std::size_t>;
};

// Number of elements a value occupies when it crosses the driver/executor
// boundary. Scalars and plain records weigh one, ranges weigh their size.
template <class T>
std::size_t payload_size(const T& v) {
  if constexpr (HasPayloadSize<T>) {
    return v.payload_size();
  } else if constexpr (std::ranges::sized_range<T>) {
    return std::ranges::size(v);
  } else {
    return 1;
  }
}

template <class T>
std::size_t payload_size(const std::optional<T>& v) {
  return v ? payload_size(*v) : 0;
}

class Engine;

// Immutable collection of per-partition items. Copies share storage; the
// persisted flag belongs to the shared storage, so persisting any copy marks
// them all.
template <class T>
class Partitioned {
 public:
  explicit Partitioned(std::vector<T> parts)
      : state_(std::make_shared<State>(State{std::move(parts), false})) {
    if (state_->parts.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "a partitioned collection needs at least one partition");
    }
  }

  std::size_t num_partitions() const noexcept { return state_->parts.size(); }
  const T& partition(std::size_t i) const { return state_->parts.at(i); }
  std::span<const T> partitions() const noexcept { return state_->parts; }
  bool persisted() const noexcept { return state_->persisted; }

  bool shares_storage_with(const Partitioned& other) const noexcept {
    return state_ == other.state_;
  }

 private:
  friend class Engine;

  struct State {
    std::vector<T> parts;
    bool persisted;
  };

  std::shared_ptr<State> state_;
};

using PartitionedDataset = Partitioned<Segment>;

// Round-robin distribution: partition sizes differ by at most one and the
// earliest partitions take the remainder.
PartitionedDataset make_dataset(std::span<const Value> values,
                                std::size_t partitions);

std::size_t total_size(const PartitionedDataset& ds);

std::vector<std::size_t> partition_sizes(const PartitionedDataset& ds);

// Read-only value shared by every partition task.
template <class T>
class Broadcast {
 public:
  explicit Broadcast(T value)
      : value_(std::make_shared<const T>(std::move(value))) {}

  const T& value() const noexcept { return *value_; }
  const T& operator*() const noexcept { return *value_; }
  const T* operator->() const noexcept { return value_.get(); }

 private:
  std::shared_ptr<const T> value_;
};

}  // namespace gks::exec
