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

#include <algorithm>
#include <cmath>
#include <string>

#include "csbm/error.h"
#include "csbm/oracle.h"

namespace csbm::oracle {
namespace {

void Extend(std::vector<Side>& labels, int v, int a_left, int b_left,
            std::vector<Partition>& out) {
  if (v == static_cast<int>(labels.size())) {
    out.push_back(Partition::FromLabels(labels));
    return;
  }
  if (a_left > 0) {
    labels[v] = Side::kA;
    Extend(labels, v + 1, a_left - 1, b_left, out);
  }
  if (b_left > 0) {
    labels[v] = Side::kB;
    Extend(labels, v + 1, a_left, b_left - 1, out);
  }
}

}  // namespace

std::vector<Partition> enumerate_balanced_partitions(int n) {
  if (n < 2 || n % 2 != 0) {
    ThrowValidation("odd_n", "enumeration needs an even n >= 2");
  }
  if (n > kEnumerationCap) {
    ThrowValidation("exact_cap", "enumeration refused above n = " +
                                     std::to_string(kEnumerationCap));
  }
  std::vector<Side> labels(n, Side::kA);
  std::vector<Partition> out;
  Extend(labels, 1, n / 2 - 1, n / 2, out);
  return out;
}

DecodeResult brute_force_ml(const ColoredGraph& graph, const Weights& weights) {
  if (weights.m() != graph.m()) {
    ThrowValidation("color_mismatch", "weights do not match graph colors");
  }
  const int n = graph.n();
  const auto partitions = enumerate_balanced_partitions(n);

  std::vector<double> pair_weight(static_cast<size_t>(n) * n, 0.0);
  for (const auto& e : graph.edges()) {
    pair_weight[static_cast<size_t>(e.u) * n + e.v] = weights.of_color(e.color);
  }

  std::vector<double> scores;
  scores.reserve(partitions.size());
  for (const auto& p : partitions) {
    double score = 0.0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (p.side(u) == p.side(v)) {
          score += pair_weight[static_cast<size_t>(u) * n + v];
        }
      }
    }
    scores.push_back(score);
  }

  const double top = *std::max_element(scores.begin(), scores.end());
  size_t best = scores.size();
  int near_top = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (std::abs(scores[i] - top) <= kScoreTolerance) {
      if (best == scores.size()) best = i;  // lexicographic order
      ++near_top;
    }
  }
  return {partitions[best], scores[best], near_top > 1,
          static_cast<int64_t>(partitions.size())};
}

}  // namespace csbm::oracle
