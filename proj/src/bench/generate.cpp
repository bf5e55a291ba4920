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

#include "gkselect/bench/generate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "gkselect/common/error.hpp"

namespace gks::bench {
namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Segment zipf(std::size_t n, std::uint64_t seed) {
  const std::size_t support = std::clamp<std::size_t>(n, 1, kZipfMaxSupport);
  std::vector<double> cdf(support);
  double acc = 0.0;
  for (std::size_t r = 0; r < support; ++r) {
    acc += std::pow(static_cast<double>(r + 1), -kZipfExponent);
    cdf[r] = acc;
  }
  for (auto& c : cdf) c /= acc;

  std::mt19937_64 rng(seed);
  const std::uint64_t salt = mix_seed(seed, 0x5a5a);
  Segment out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit_double(rng);
    const auto r = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    out.push_back(static_cast<Value>(mix_seed(salt, std::min(r, support - 1))));
  }
  return out;
}

}  // namespace

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::kUniformInt: return "uniform_int";
    case Distribution::kZipf: return "zipf";
    case Distribution::kSorted: return "sorted";
    case Distribution::kReverseSorted: return "reverse_sorted";
    case Distribution::kConstant: return "constant";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform_int" || name == "uniform") return Distribution::kUniformInt;
  if (name == "zipf") return Distribution::kZipf;
  if (name == "sorted") return Distribution::kSorted;
  if (name == "reverse_sorted") return Distribution::kReverseSorted;
  if (name == "constant") return Distribution::kConstant;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown distribution '" + std::string(name) + "'");
}

Segment generate(Distribution distribution, std::size_t n, std::uint64_t seed) {
  Segment out;
  switch (distribution) {
    case Distribution::kZipf:
      return zipf(n, seed);
    case Distribution::kConstant:
      return Segment(n, static_cast<Value>(mix_seed(seed)));
    case Distribution::kUniformInt:
    case Distribution::kSorted:
    case Distribution::kReverseSorted: {
      std::mt19937_64 rng(seed);
      out.resize(n);
      for (auto& v : out) v = static_cast<Value>(rng());
      if (distribution == Distribution::kSorted) {
        std::sort(out.begin(), out.end());
      } else if (distribution == Distribution::kReverseSorted) {
        std::sort(out.begin(), out.end(), std::greater<>());
      }
      return out;
    }
  }
  return out;
}

}  // namespace gks::bench
