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
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "gkselect/common/error.hpp"
#include "gkselect/common/types.hpp"
#include "gkselect/exec/exec_stats.hpp"
#include "gkselect/exec/partitioned.hpp"
#include "gkselect/exec/thread_pool.hpp"

namespace gks::exec {

// Handed to every partition task. Tasks may only touch their own context;
// the engine folds the contexts into ExecStats after the stage joins.
class TaskContext {
 public:
  explicit TaskContext(std::size_t partition) : partition_(partition) {}

  std::size_t partition_index() const noexcept { return partition_; }
  void add_comparisons(std::uint64_t n) noexcept { comparisons_ += n; }
  std::uint64_t comparisons() const noexcept { return comparisons_; }

 private:
  std::size_t partition_;
  std::uint64_t comparisons_ = 0;
};

namespace detail {

template <class F, class T>
decltype(auto) invoke_task(F& f, TaskContext& ctx, const T& item) {
  if constexpr (std::is_invocable_v<F&, TaskContext&, const T&>) {
    return f(ctx, item);
  } else {
    return f(item);
  }
}

template <class F, class T>
using task_result_t = std::decay_t<decltype(invoke_task(
    std::declval<F&>(), std::declval<TaskContext&>(), std::declval<const T&>()))>;

}  // namespace detail

// Single-process stand-in for a Spark driver plus executors.
//
// Transformations (map_partitions) run eagerly on the worker pool and never
// count as actions. collect, tree_reduce and shuffle are actions: each one
// increments `actions` and is a join point for the pool. broadcast and
// persist move or pin data without creating a stage boundary.
//
// Driver-side methods are not thread-safe; call them from one thread.
class Engine {
 public:
  explicit Engine(std::size_t workers = 1) : pool_(workers) {}

  std::size_t workers() const noexcept { return pool_.workers(); }
  const ExecStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = ExecStats{}; }

  template <class T, class F>
  auto map_partitions(const Partitioned<T>& in, F&& f)
      -> Partitioned<detail::task_result_t<F, T>> {
    using R = detail::task_result_t<F, T>;
    const std::size_t parts = in.num_partitions();
    std::vector<std::optional<R>> slots(parts);
    std::vector<TaskContext> contexts;
    contexts.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i) contexts.emplace_back(i);

    pool_.parallel_for(parts, [&](std::size_t i) {
      slots[i].emplace(detail::invoke_task(f, contexts[i], in.partition(i)));
    });

    std::vector<R> out;
    out.reserve(parts);
    for (std::size_t i = 0; i < parts; ++i) {
      out.push_back(std::move(*slots[i]));
      stats_.comparisons += contexts[i].comparisons();
    }
    return Partitioned<R>(std::move(out));
  }

  template <class T>
  std::vector<T> collect(const Partitioned<T>& in) {
    ++stats_.actions;
    std::vector<T> out(in.partitions().begin(), in.partitions().end());
    for (const auto& item : out) stats_.collected_elements += payload_size(item);
    return out;
  }

  // Concatenates all partitions in partition order.
  Segment collect_values(const PartitionedDataset& ds);

  // Pairwise binary-tree combination of one contribution per partition:
  // exactly P - 1 merges, one action.
  template <class T, class M>
  T tree_reduce(const Partitioned<T>& in, M&& merge) {
    ++stats_.actions;
    std::vector<T> leaves(in.partitions().begin(), in.partitions().end());
    return reduce_levels(std::move(leaves), merge);
  }

  // Partitions holding std::nullopt contribute nothing. Throws empty-reduce
  // when no partition contributes.
  template <class T, class M>
  T tree_reduce(const Partitioned<std::optional<T>>& in, M&& merge) {
    ++stats_.actions;
    std::vector<T> leaves;
    for (const auto& item : in.partitions()) {
      if (item) leaves.push_back(*item);
    }
    if (leaves.empty()) {
      throw Error(ErrorCode::kEmptyReduce, "no partition contributed a value");
    }
    return reduce_levels(std::move(leaves), merge);
  }

  template <class T>
  Broadcast<T> broadcast(T value) {
    stats_.broadcast_elements += payload_size(value);
    return Broadcast<T>(std::move(value));
  }

  // Idempotent: pinning the same storage twice is counted once.
  template <class T>
  const Partitioned<T>& persist(const Partitioned<T>& ds) {
    if (!ds.state_->persisted) {
      ds.state_->persisted = true;
      ++stats_.persists;
      for (const auto& item : ds.partitions()) {
        stats_.persisted_records += payload_size(item);
      }
    }
    return ds;
  }

  // Range/hash repartitioning. route(value) must land in [0, P); an
  // out-of-range destination throws invalid-route. Within a destination,
  // values keep source-partition order.
  PartitionedDataset shuffle(const PartitionedDataset& ds,
                             const std::function<std::size_t(Value)>& route);

 private:
  template <class T, class M>
  T reduce_levels(std::vector<T> nodes, M& merge) {
    if (nodes.empty()) {
      throw Error(ErrorCode::kEmptyReduce, "tree_reduce over zero values");
    }
    while (nodes.size() > 1) {
      const std::size_t pairs = nodes.size() / 2;
      std::vector<std::optional<T>> next(pairs);
      for (std::size_t i = 0; i < pairs; ++i) {
        stats_.tree_transfer_elements += payload_size(nodes[2 * i + 1]);
      }
      pool_.parallel_for(pairs, [&](std::size_t i) {
        next[i].emplace(merge(std::move(nodes[2 * i]), std::move(nodes[2 * i + 1])));
      });
      stats_.tree_reduce_merges += pairs;

      std::vector<T> level;
      level.reserve(pairs + 1);
      for (auto& n : next) level.push_back(std::move(*n));
      if (nodes.size() % 2 == 1) level.push_back(std::move(nodes.back()));
      nodes = std::move(level);
    }
    return std::move(nodes.front());
  }

  ThreadPool pool_;
  ExecStats stats_;
};

}  // namespace gks::exec
