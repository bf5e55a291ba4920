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

#include <cstdint>
#include <optional>
#include <span>

#include "gkselect/common/types.hpp"
#include "gkselect/select/random.hpp"

namespace gks::select {

// Size-one reservoir. `weight` is the number of stream elements the pick
// stands for, which is what makes two picks composable.
struct ReservoirPick {
  std::optional<Value> value;
  std::uint64_t weight = 0;

  void offer(Value v, SplitMix64& rng) {
    ++weight;
    if (rng.below(weight) == 0) value = v;
  }

  // Keeps a's pick with probability a.weight / (a.weight + b.weight). An
  // empty side has weight zero and is never chosen.
  static ReservoirPick combine(const ReservoirPick& a, const ReservoirPick& b,
                               SplitMix64& rng) {
    const std::uint64_t total = a.weight + b.weight;
    if (total == 0) return {};
    ReservoirPick out;
    out.weight = total;
    out.value = rng.below(total) < a.weight ? a.value : b.value;
    return out;
  }
};

// Single pass over `stream`; every element is returned with probability 1/n.
ReservoirPick reservoir_pick(std::span<const Value> stream, SplitMix64& rng);

}  // namespace gks::select
