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
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gkselect/common/error.hpp"

namespace gks::exec {
namespace {

TEST(ThreadPool, RejectsZeroWorkers) {
  EXPECT_THROW(ThreadPool(0), Error);
}

TEST(ThreadPool, RunsEveryIndexOnce) {
  for (std::size_t workers : {1u, 2u, 4u}) {
    ThreadPool pool(workers);
    std::vector<std::atomic<int>> hits(1000);
    pool.parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(ThreadPool, IsAJoinPoint) {
  ThreadPool pool(4);
  std::atomic<int> first{0};
  std::atomic<bool> early_second{false};
  for (int stage = 0; stage < 20; ++stage) {
    first = 0;
    pool.parallel_for(16, [&](std::size_t) { first++; });
    pool.parallel_for(16, [&](std::size_t) {
      if (first.load() != 16) early_second = true;
    });
  }
  EXPECT_FALSE(early_second.load());
}

TEST(ThreadPool, RethrowsTaskException) {
  ThreadPool pool(3);
  EXPECT_THROW(pool.parallel_for(10,
                                 [](std::size_t i) {
                                   if (i == 7) throw std::runtime_error("boom");
                                 }),
               std::runtime_error);
  // Still usable afterwards.
  std::atomic<int> n{0};
  pool.parallel_for(5, [&](std::size_t) { n++; });
  EXPECT_EQ(n.load(), 5);
}

TEST(ThreadPool, ZeroCountIsNoop) {
  ThreadPool pool(2);
  pool.parallel_for(0, [](std::size_t) { FAIL(); });
}

}  // namespace
}  // namespace gks::exec
