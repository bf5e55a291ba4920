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

namespace gks::bench {

enum class Distribution { kUniformInt, kZipf, kSorted, kReverseSorted, kConstant };

std::string_view to_string(Distribution d);
Distribution parse_distribution(std::string_view name);

// Zipf parameters: P(rank r) proportional to r^-kZipfExponent over
// min(n, kZipfMaxSupport) ranks; each rank maps to a hashed int64 value.
inline constexpr double kZipfExponent = 1.2;
inline constexpr std::size_t kZipfMaxSupport = std::size_t{1} << 20;

// Deterministic for a fixed (distribution, n, seed).
Segment generate(Distribution distribution, std::size_t n, std::uint64_t seed);

}  // namespace gks::bench
