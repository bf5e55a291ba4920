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
#include <span>

#include "gkselect/common/types.hpp"

namespace gks::select {

// k-th smallest (1-based, duplicates counted) of `segment`. The input is not
// modified. Throws invalid-rank unless 1 <= k <= |segment|.
//
// Random pivots drawn from `seed`; after 2*log2(n) levels the pivot switches
// to median-of-three. Expected linear time.
Value quickselect(std::span<const Value> segment, std::size_t k,
                  std::uint64_t seed = 0, std::uint64_t* comparisons = nullptr);

// nth_element contract on a mutable range: afterwards values[k-1] holds the
// k-th smallest, everything before it is <= and everything after is >=.
void select_in_place(std::span<Value> values, std::size_t k,
                     std::uint64_t seed = 0,
                     std::uint64_t* comparisons = nullptr);

}  // namespace gks::select
