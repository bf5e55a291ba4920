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

#include "gkselect/common/rank.hpp"

#include <gtest/gtest.h>

#include "gkselect/common/error.hpp"
#include "support/oracle.hpp"

namespace gks {
namespace {

TEST(TargetRank, CeilingAndClamp) {
  EXPECT_EQ(target_rank(0.5, 5), 3u);
  EXPECT_EQ(target_rank(0.5, 4), 2u);
  EXPECT_EQ(target_rank(0.0, 10), 1u);
  EXPECT_EQ(target_rank(1.0, 10), 10u);
  EXPECT_EQ(target_rank(0.01, 100), 1u);
  EXPECT_EQ(target_rank(0.011, 100), 2u);
}

TEST(TargetRank, ProductsThatAreIntegersInExactArithmetic) {
  // 0.07 * 100 is 7.000000000000001 in binary floating point.
  EXPECT_EQ(target_rank(0.07, 100), 7u);
  EXPECT_EQ(target_rank(0.29, 100), 29u);
  EXPECT_EQ(target_rank(0.57, 100), 57u);
}

TEST(TargetRank, MatchesOracleOnGrid) {
  for (std::uint64_t n : {1u, 2u, 7u, 100u, 1000u, 99991u}) {
    for (int i = 0; i <= 100; ++i) {
      const double q = i / 100.0;
      EXPECT_EQ(target_rank(q, n), testing::oracle_rank(q, n)) << q << " " << n;
    }
  }
}

TEST(TargetRank, Errors) {
  EXPECT_THROW(target_rank(-0.1, 10), Error);
  EXPECT_THROW(target_rank(1.5, 10), Error);
  try {
    target_rank(0.5, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

}  // namespace
}  // namespace gks
