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

#include "csbm/sampler.h"

#include <string>
#include <vector>

#include "csbm/error.h"
#include "csbm/parallel.h"
#include "csbm/rng.h"

namespace csbm {
namespace {

std::vector<double> Cumulative(const std::vector<double>& probs) {
  std::vector<double> out(probs.size());
  double running = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    out[i] = running;
  }
  return out;
}

// 1-based color, or 0 for no edge.
int Draw(const std::vector<double>& cumulative, double u) {
  for (size_t i = 0; i < cumulative.size(); ++i) {
    if (u < cumulative[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace

ColoredGraph sample_graph(const ModelParams& params, const Partition& partition,
                          uint64_t seed, int threads) {
  const int n = params.n();
  if (partition.n() != n) {
    ThrowValidation("size_mismatch", "partition has " +
                                         std::to_string(partition.n()) +
                                         " vertices, params expect " +
                                         std::to_string(n));
  }
  const auto within = Cumulative(params.within_probs());
  const auto cross = Cumulative(params.cross_probs());

  std::vector<std::vector<Edge>> rows(n);
  ParallelFor(n, threads, [&](int64_t row) {
    const int u = static_cast<int>(row);
    auto& out = rows[u];
    for (int v = u + 1; v < n; ++v) {
      const double draw = ToUnit(DeriveSeed(seed, u, v));
      const int color =
          Draw(partition.same_side(u, v) ? within : cross, draw);
      if (color != 0) out.push_back({u, v, color});
    }
  });

  std::vector<Edge> edges;
  size_t total = 0;
  for (const auto& r : rows) total += r.size();
  edges.reserve(total);
  for (auto& r : rows) edges.insert(edges.end(), r.begin(), r.end());
  return ColoredGraph::FromEdges(n, params.m(), std::move(edges));
}

}  // namespace csbm
