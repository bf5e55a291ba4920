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
#include <iosfwd>

namespace gks::exec {

// Counters recorded by the engine. Actions are the stage boundaries
// (collect, tree_reduce, shuffle); everything else measures data movement.
struct ExecStats {
  std::uint64_t actions = 0;
  std::uint64_t shuffle_stages = 0;
  std::uint64_t persists = 0;
  std::uint64_t broadcast_elements = 0;
  std::uint64_t collected_elements = 0;
  std::uint64_t tree_reduce_merges = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t shuffled_records = 0;
  std::uint64_t persisted_records = 0;
  // Elements sent across tree edges during tree_reduce (one hop each).
  std::uint64_t tree_transfer_elements = 0;

  friend bool operator==(const ExecStats&, const ExecStats&) = default;
};

// Field-wise difference; used to attribute counters to a single run.
ExecStats operator-(const ExecStats& after, const ExecStats& before);

std::ostream& operator<<(std::ostream& os, const ExecStats& s);

// Coarse latency model in abstract units:
//   latency * actions
//   + per_element * (collected + broadcast + shuffled)
//   + per_element * hop_factor * tree_transfer
// It is a relative cost signal, not wall time.
struct CostModel {
  double latency = 0.0;      // L
  double per_element = 0.0;  // g
  double hop_factor = 0.0;   // h
};

double estimate_latency(const ExecStats& stats, const CostModel& model);

}  // namespace gks::exec
