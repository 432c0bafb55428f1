// Copyright 2026 The csbm Authors.
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

#ifndef CSBM_DECODER_H_
#define CSBM_DECODER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "csbm/graph.h"
#include "csbm/model.h"
#include "csbm/partition.h"

namespace csbm {

// Largest n the exhaustive decoder accepts by default: C(24,12)/2 ~ 1.35e6
// candidate partitions.
inline constexpr int kDefaultExactCap = 24;

// Two scores within this distance are treated as equal.
inline constexpr double kScoreTolerance = 1e-9;

// ML objective: sum_i l_i * w_i where l_i counts within-community color-i
// edges.
double score_partition(const ColoredGraph& graph, const Weights& weights,
                       const Partition& partition);

struct DecodeResult {
  Partition best;  // canonical (vertex 0 in A)
  double best_score = 0.0;
  // Another balanced partition scores within kScoreTolerance of best_score.
  bool tie = false;
  int64_t explored = 0;
};

// Exhaustive argmax over the C(n, n/2)/2 canonical balanced partitions.
// Among maximizers the lexicographically smallest label string is returned.
// Refuses (ValidationError "exact_cap") when n exceeds `cap`.
DecodeResult ml_decode_exact(const ColoredGraph& graph, const Weights& weights,
                             int cap = kDefaultExactCap);

struct SwapMove {
  int from_a = 0;  // vertex currently on side A
  int from_b = 0;  // vertex currently on side B
  double gain = 0.0;
};

// Best strictly improving single swap (gain > kScoreTolerance), ties broken
// by smallest from_a then smallest from_b. Empty at a swap-local maximum.
std::optional<SwapMove> best_swap(const ColoredGraph& graph,
                                  const Weights& weights,
                                  const Partition& partition);

// Applies best_swap until none improves or max_rounds swaps were made.
Partition local_refine(const ColoredGraph& graph, const Weights& weights,
                       const Partition& init, int max_rounds);

// Per-vertex witnesses of ML failure relative to the planted partition. A
// vertex in A fails when its weighted edges into B outweigh those into A;
// a vertex in B fails when its weighted edges into A outweigh those into B.
// Equality is not a failure.
struct FailureReport {
  std::vector<int> f_a_vertices;
  std::vector<int> f_b_vertices;
  bool f_a = false;
  bool f_b = false;
};

FailureReport vertex_failure_events(const ColoredGraph& graph,
                                    const Weights& weights,
                                    const Partition& planted);

bool partitions_equal_up_to_swap(const Partition& p1, const Partition& p2);

}  // namespace csbm

#endif  // CSBM_DECODER_H_
