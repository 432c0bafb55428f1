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

#include "csbm/decoder.h"

#include <algorithm>
#include <string>

#include "csbm/error.h"

namespace csbm {
namespace {

void CheckWeights(const ColoredGraph& graph, const Weights& weights) {
  if (weights.m() != graph.m()) {
    ThrowValidation("color_mismatch",
                    "graph has " + std::to_string(graph.m()) +
                        " colors, weights have " +
                        std::to_string(weights.m()));
  }
}

void CheckSize(const ColoredGraph& graph, const Partition& partition) {
  if (graph.n() != partition.n()) {
    ThrowValidation("size_mismatch", "graph has " + std::to_string(graph.n()) +
                                         " vertices, partition has " +
                                         std::to_string(partition.n()));
  }
}

double Dot(const std::vector<int64_t>& counts, const Weights& weights) {
  double total = 0.0;
  for (int c = 0; c < weights.m(); ++c) {
    total += static_cast<double>(counts[c]) * weights.values()[c];
  }
  return total;
}

// Bit v set means vertex v is in A. Returns true when a's label string sorts
// before b's: at the first differing vertex a has label A.
bool LexLess(uint32_t a, uint32_t b) {
  const uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) != 0;
}

Partition FromMask(uint32_t mask, int n) {
  std::vector<Side> labels(n);
  for (int v = 0; v < n; ++v) {
    labels[v] = (mask >> v) & 1u ? Side::kA : Side::kB;
  }
  return Partition::FromLabels(std::move(labels));
}

// Per-vertex color counts toward each side, plus the vertex gain
// sum_c (out_c - in_c) * w_c used by swap evaluation.
struct SideCounts {
  std::vector<int64_t> to_a;  // n * m
  std::vector<int64_t> to_b;
};

SideCounts CountBySide(const ColoredGraph& graph, const Partition& partition) {
  const int m = graph.m();
  SideCounts counts{std::vector<int64_t>(static_cast<size_t>(graph.n()) * m, 0),
                    std::vector<int64_t>(static_cast<size_t>(graph.n()) * m, 0)};
  for (const auto& e : graph.edges()) {
    const int c = e.color - 1;
    auto& from_u = partition.side(e.v) == Side::kA ? counts.to_a : counts.to_b;
    auto& from_v = partition.side(e.u) == Side::kA ? counts.to_a : counts.to_b;
    ++from_u[static_cast<size_t>(e.u) * m + c];
    ++from_v[static_cast<size_t>(e.v) * m + c];
  }
  return counts;
}

double WeightedRow(const std::vector<int64_t>& table, int v,
                   const Weights& weights) {
  const int m = weights.m();
  double total = 0.0;
  for (int c = 0; c < m; ++c) {
    total += static_cast<double>(table[static_cast<size_t>(v) * m + c]) *
             weights.values()[c];
  }
  return total;
}

}  // namespace

double score_partition(const ColoredGraph& graph, const Weights& weights,
                       const Partition& partition) {
  CheckWeights(graph, weights);
  CheckSize(graph, partition);
  return Dot(inner_and_cross_counts(graph, partition).inner, weights);
}

DecodeResult ml_decode_exact(const ColoredGraph& graph, const Weights& weights,
                             int cap) {
  CheckWeights(graph, weights);
  const int n = graph.n();
  if (n > cap || n > 31) {
    ThrowValidation("exact_cap", "exact decoding refused for n = " +
                                     std::to_string(n) + " (cap " +
                                     std::to_string(cap) +
                                     "); use local_refine instead");
  }
  if (n < 2 || n % 2 != 0) {
    ThrowValidation("partition_size", "exact decoding needs an even n >= 2");
  }

  const int m = graph.m();
  const auto edges = graph.edges();
  std::vector<uint32_t> masks;
  std::vector<double> scores;
  std::vector<int64_t> inner(m);

  auto score_mask = [&](uint32_t mask) {
    std::fill(inner.begin(), inner.end(), 0);
    for (const auto& e : edges) {
      if ((((mask >> e.u) ^ (mask >> e.v)) & 1u) == 0) ++inner[e.color - 1];
    }
    masks.push_back(mask);
    scores.push_back(Dot(inner, weights));
  };

  // Vertex 0 is pinned to A; choose the other n/2 - 1 members of A among
  // vertices 1..n-1 in ascending bit-pattern order (Gosper's hack).
  const int others = n - 1;
  const int pick = n / 2 - 1;
  if (pick == 0) {
    score_mask(1u);
  } else {
    const uint64_t limit = uint64_t{1} << others;
    uint64_t combo = (uint64_t{1} << pick) - 1;
    while (combo < limit) {
      score_mask(static_cast<uint32_t>(combo << 1) | 1u);
      const uint64_t low = combo & (~combo + 1);
      const uint64_t ripple = combo + low;
      combo = (((ripple ^ combo) >> 2) / low) | ripple;
    }
  }

  const double top = *std::max_element(scores.begin(), scores.end());
  uint32_t best_mask = 0;
  int near_top = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] < top - kScoreTolerance) continue;
    if (near_top == 0 || LexLess(masks[i], best_mask)) best_mask = masks[i];
    ++near_top;
  }

  Partition best = FromMask(best_mask, n);
  DecodeResult result{best, score_partition(graph, weights, best),
                      near_top > 1, static_cast<int64_t>(scores.size())};
  return result;
}

std::optional<SwapMove> best_swap(const ColoredGraph& graph,
                                  const Weights& weights,
                                  const Partition& partition) {
  CheckWeights(graph, weights);
  CheckSize(graph, partition);
  const int n = graph.n();
  const SideCounts counts = CountBySide(graph, partition);

  // gain[v]: score change from v's own edges if v moved to the other side,
  // ignoring the edge to its swap partner.
  std::vector<double> gain(n);
  for (int v = 0; v < n; ++v) {
    const double to_a = WeightedRow(counts.to_a, v, weights);
    const double to_b = WeightedRow(counts.to_b, v, weights);
    gain[v] = partition.side(v) == Side::kA ? to_b - to_a : to_a - to_b;
  }

  std::vector<int> side_a = partition.members(Side::kA);
  std::vector<int> side_b = partition.members(Side::kB);
  std::vector<int> b_by_gain = side_b;
  std::stable_sort(b_by_gain.begin(), b_by_gain.end(),
                   [&](int x, int y) { return gain[x] > gain[y]; });

  std::vector<int> mark(n, -1);
  std::optional<SwapMove> best;
  for (const int a : side_a) {
    for (const auto& nb : graph.neighbors(a)) mark[nb.vertex] = a;

    int pick = -1;
    double pick_gain = 0.0;
    auto consider = [&](int b, double delta) {
      if (pick < 0 || delta > pick_gain || (delta == pick_gain && b < pick)) {
        pick = b;
        pick_gain = delta;
      }
    };
    // Best partner not adjacent to a: the first unmarked entry in gain order.
    // Equal gains keep ascending vertex order from the stable sort.
    for (const int b : b_by_gain) {
      if (mark[b] != a) {
        consider(b, gain[a] + gain[b]);
        break;
      }
    }
    // Adjacent partners: the a-b edge stays across the cut after the swap,
    // so it is removed from both gains.
    for (const auto& nb : graph.neighbors(a)) {
      if (partition.side(nb.vertex) != Side::kB) continue;
      consider(nb.vertex,
               gain[a] + gain[nb.vertex] - 2.0 * weights.of_color(nb.color));
    }

    if (pick >= 0 && pick_gain > kScoreTolerance &&
        (!best || pick_gain > best->gain)) {
      best = SwapMove{a, pick, pick_gain};
    }
  }
  return best;
}

Partition local_refine(const ColoredGraph& graph, const Weights& weights,
                       const Partition& init, int max_rounds) {
  CheckSize(graph, init);
  Partition current = init;
  for (int round = 0; round < max_rounds; ++round) {
    const auto move = best_swap(graph, weights, current);
    if (!move) break;
    current = current.swapped(move->from_a, move->from_b);
  }
  return current;
}

FailureReport vertex_failure_events(const ColoredGraph& graph,
                                    const Weights& weights,
                                    const Partition& planted) {
  CheckWeights(graph, weights);
  CheckSize(graph, planted);
  const SideCounts counts = CountBySide(graph, planted);
  FailureReport report;
  for (int v = 0; v < graph.n(); ++v) {
    const double to_a = WeightedRow(counts.to_a, v, weights);
    const double to_b = WeightedRow(counts.to_b, v, weights);
    if (planted.side(v) == Side::kA) {
      if (to_b - to_a > kScoreTolerance) report.f_a_vertices.push_back(v);
    } else {
      if (to_a - to_b > kScoreTolerance) report.f_b_vertices.push_back(v);
    }
  }
  report.f_a = !report.f_a_vertices.empty();
  report.f_b = !report.f_b_vertices.empty();
  return report;
}

bool partitions_equal_up_to_swap(const Partition& p1, const Partition& p2) {
  if (p1.n() != p2.n()) {
    ThrowValidation("size_mismatch", "partitions differ in size");
  }
  return p1.canonical() == p2.canonical();
}

}  // namespace csbm
