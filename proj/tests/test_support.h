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

#ifndef CSBM_TESTS_TEST_SUPPORT_H_
#define CSBM_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <vector>

#include "csbm/graph.h"
#include "csbm/model.h"
#include "csbm/partition.h"
#include "csbm/rng.h"

namespace csbm::testing {

// Random admissible parameters: every rate in (0.05, 1) * cap / m, where cap
// keeps both categorical masses below 0.95.
inline ModelParams RandomParams(SplitMix64& rng, int n, int m) {
  const double cap = 0.95 / (std::log(n) / n);
  std::vector<double> alphas(m), betas(m);
  for (int i = 0; i < m; ++i) {
    alphas[i] = (0.05 + 0.95 * rng.Uniform()) * cap / m;
    betas[i] = (0.05 + 0.95 * rng.Uniform()) * cap / m;
  }
  return make_params(n, alphas, betas);
}

inline int RandomEvenN(SplitMix64& rng, int lo, int hi) {
  return lo + 2 * static_cast<int>(rng.Below((hi - lo) / 2 + 1));
}

// Each pair independently carries one of m colors with probability density.
inline ColoredGraph RandomGraph(SplitMix64& rng, int n, int m,
                                double density) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Uniform() < density) {
        edges.push_back({u, v, 1 + static_cast<int>(rng.Below(m))});
      }
    }
  }
  return ColoredGraph::FromEdges(n, m, std::move(edges));
}

inline Weights RandomWeights(SplitMix64& rng, int m) {
  std::vector<double> w(m);
  for (auto& x : w) x = 4.0 * rng.Uniform() - 1.0;
  return Weights(std::move(w));
}

}  // namespace csbm::testing

#endif  // CSBM_TESTS_TEST_SUPPORT_H_
