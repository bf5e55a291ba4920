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

#include "gkselect/exec/thread_pool.hpp"

#include <atomic>
#include <exception>

#include "gkselect/common/error.hpp"

namespace gks::exec {

ThreadPool::ThreadPool(std::size_t workers) : workers_(workers) {
  if (workers == 0) {
    throw Error(ErrorCode::kInvalidArgument, "worker count must be >= 1");
  }
  // A single worker runs everything inline on the calling thread.
  if (workers_ > 1) {
    threads_.reserve(workers_);
    for (std::size_t i = 0; i < workers_; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::worker_loop() {
  for (;;) {
    std::function<void()> task;
    {
      std::unique_lock lock(mutex_);
      wake_.wait(lock, [this] { return stopping_ || !tasks_.empty(); });
      if (stopping_ && tasks_.empty()) return;
      task = std::move(tasks_.front());
      tasks_.pop();
    }
    task();
  }
}

void ThreadPool::parallel_for(std::size_t count,
                              const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  if (threads_.empty() || count == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex done_mutex;
  std::condition_variable done;
  std::size_t finished = 0;
  std::exception_ptr failure;

  const std::size_t lanes = std::min(count, workers_);
  auto lane = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) break;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(done_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    std::lock_guard lock(done_mutex);
    if (++finished == lanes) done.notify_one();
  };

  {
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < lanes; ++i) tasks_.emplace(lane);
  }
  wake_.notify_all();

  std::unique_lock lock(done_mutex);
  done.wait(lock, [&] { return finished == lanes; });
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gks::exec
