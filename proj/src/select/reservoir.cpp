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

#include "gkselect/select/reservoir.hpp"

namespace gks::select {

ReservoirPick reservoir_pick(std::span<const Value> stream, SplitMix64& rng) {
  ReservoirPick pick;
  for (Value v : stream) pick.offer(v, rng);
  return pick;
}

}  // namespace gks::select
