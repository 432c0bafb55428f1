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

#ifndef CSBM_BOUNDS_H_
#define CSBM_BOUNDS_H_

#include <string>
#include <utility>
#include <vector>

#include "csbm/ldp.h"
#include "csbm/model.h"

namespace csbm {

enum class BoundDirection { kUpper, kLower };

// A probability bound with the inputs it was evaluated at. Values are never
// clamped into [0, 1]; `vacuous` marks upper bounds >= 1 and lower bounds
// <= 0 instead.
struct BoundReport {
  std::string formula_id;
  BoundDirection direction = BoundDirection::kUpper;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  // ln(value); finite even when value itself overflows or underflows.
  double log_value = 0.0;
  bool vacuous = false;
  // Empty, or one of "infinite_rate", "outside_hull", "boundary".
  std::string flag;

  // Named input; throws std::out_of_range when absent.
  double input(const std::string& name) const;
};

// 2 exp(-N inf_{x >= threshold} I(x)) bounding P(mean of N draws >=
// threshold). The infimum is I(threshold) above the mean and 0 otherwise.
BoundReport cramer_upper_bound(const FiniteLaw& law, long long terms,
                               double threshold);

// exp(-N (I(a) + eps |eta*|)) max(0, 1 - sigma^2 / (N eps^2)) bounding
// P(mean of N draws in (a - eps, a + eps)). eta* is the maximizer behind
// I(a) and sigma^2 the variance of the eta*-tilted law. Zero, with flag
// "outside_hull", when a is not strictly inside the support hull.
BoundReport cramer_lower_bound(const FiniteLaw& law, long long terms, double a,
                               double epsilon);

// Chernoff bound at theta = 1/2 on P(sum of 2k(n/2 - k) pair differences
// >= 0): 2 exp(2k(n/2 - k) ln E[exp((Z - W)/2)]).
// Requires 1 <= k <= n/4.
BoundReport pnk_theoretical_bound(const ModelParams& params, int k);

// sum_{k=1}^{n/4} C(n/2, k)^2 pnk_theoretical_bound(k), summed in log space.
BoundReport ml_failure_union_bound(const ModelParams& params);

// Multiplicative-Chernoff plus union bound on the probability that some
// vertex of the first n/ln^3 n has an atypically heavy neighborhood inside
// that set:
//   exp[ln(n / ln^3 n) - (ln n / ln ln n) ln(ln^3 n / (e ln ln n sum alpha))].
// Requires n >= 16.
BoundReport delta_complement_bound(int n, const std::vector<double>& alphas);

// One-sided Chebyshev lower bound max(0, 1 - variance / t^2) on
// P(S >= mean - t). Requires variance >= 0 and t > 0.
BoundReport chebyshev_tail(double mean, double variance, double t);

// chebyshev_tail instantiated for S = sum of floor(n / ln^3 n) cross-pair
// weights against the threshold (1/ln^2 n) sum beta_i ln(alpha_i/beta_i) - K.
// Inputs echo "terms", "threshold", "mean", "variance" and "t".
BoundReport cross_sum_chebyshev_bound(const ModelParams& params, double k);

// cramer_lower_bound on the pair-difference law with N = floor(n/2 -
// n/ln^3 n) terms, a = M ln n / (N ln ln n) + eps and eps = ln^(2/3) n / n,
// where M is the largest color weight. Inputs also carry the asymptotic
// exponent -(ln n / 2) sum (sqrt(alpha_i) - sqrt(beta_i))^2 for comparison.
BoundReport heavy_neighbor_lower_bound(const ModelParams& params);

}  // namespace csbm

#endif  // CSBM_BOUNDS_H_
