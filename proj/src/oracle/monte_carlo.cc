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

#include <cmath>
#include <string>

#include "csbm/error.h"
#include "csbm/oracle.h"
#include "csbm/parallel.h"
#include "csbm/rng.h"

namespace csbm::oracle {
namespace {

// 0-based color, or -1 for no edge.
int DrawColor(const std::vector<double>& cumulative, double u) {
  for (size_t i = 0; i < cumulative.size(); ++i) {
    if (u < cumulative[i]) return static_cast<int>(i);
  }
  return -1;
}

std::vector<double> Cumulative(const std::vector<double>& probs) {
  std::vector<double> out(probs.size());
  double running = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) out[i] = running += probs[i];
  return out;
}

}  // namespace

McEstimate monte_carlo_pnk(const ModelParams& params, int k, int64_t trials,
                           uint64_t seed, int threads) {
  const int n = params.n();
  if (k < 1 || k > n / 4) {
    ThrowValidation("k_range", "k must lie in [1, " + std::to_string(n / 4) +
                                   "]");
  }
  if (trials < 1) ThrowValidation("trials_range", "need at least one trial");

  const int64_t terms = 2LL * k * (n / 2 - k);
  const int m = params.m();
  const auto within = Cumulative(params.within_probs());
  const auto cross = Cumulative(params.cross_probs());
  const auto w = params.weights().values();

  const int64_t chunks = std::min<int64_t>(trials, 256);
  std::vector<int64_t> hits(chunks, 0);
  ParallelFor(chunks, threads, [&](int64_t chunk) {
    const int64_t begin = trials * chunk / chunks;
    const int64_t end = trials * (chunk + 1) / chunks;
    std::vector<int64_t> net(m);
    for (int64_t trial = begin; trial < end; ++trial) {
      SplitMix64 rng(DeriveSeed(seed, static_cast<uint64_t>(trial)));
      std::fill(net.begin(), net.end(), 0);
      for (int64_t t = 0; t < terms; ++t) {
        const int z = DrawColor(cross, rng.Uniform());
        const int wc = DrawColor(within, rng.Uniform());
        if (z >= 0) ++net[z];
        if (wc >= 0) --net[wc];
      }
      double sum = 0.0;
      for (int c = 0; c < m; ++c) sum += static_cast<double>(net[c]) * w[c];
      if (sum >= -ExactLaw::kValueResolution) ++hits[chunk];
    }
  });

  McEstimate result;
  result.trials = trials;
  for (const int64_t h : hits) result.hits += h;
  result.estimate = static_cast<double>(result.hits) / trials;
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / trials);
  return result;
}

}  // namespace csbm::oracle
