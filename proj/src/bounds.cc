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

#include "csbm/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "csbm/error.h"

namespace csbm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void Finish(BoundReport& report) {
  report.value = std::exp(report.log_value);
  report.vacuous = report.direction == BoundDirection::kUpper
                       ? report.value >= 1.0
                       : report.value <= 0.0;
}

double LogBinomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void RequireTerms(long long terms) {
  if (terms < 1) ThrowValidation("terms_range", "need at least one term");
}

}  // namespace

double BoundReport::input(const std::string& name) const {
  for (const auto& [key, value] : inputs) {
    if (key == name) return value;
  }
  throw std::out_of_range("bound input not found: " + name);
}

BoundReport cramer_upper_bound(const FiniteLaw& law, long long terms,
                               double threshold) {
  RequireTerms(terms);
  BoundReport report;
  report.formula_id = "cramer_upper";
  report.direction = BoundDirection::kUpper;
  report.inputs = {{"terms", static_cast<double>(terms)},
                   {"threshold", threshold}};
  // The rate is convex with its zero at the mean, so over [threshold, inf)
  // the infimum sits at the threshold when that lies right of the mean.
  double rate = 0.0;
  if (threshold > law.mean()) {
    const RateResult r = rate_function(law, threshold);
    rate = r.rate;
    if (r.infinite) report.flag = "infinite_rate";
  }
  report.inputs.emplace_back("rate", rate);
  report.log_value = std::isinf(rate)
                         ? -kInf
                         : std::numbers::ln2 - static_cast<double>(terms) * rate;
  Finish(report);
  return report;
}

BoundReport cramer_lower_bound(const FiniteLaw& law, long long terms, double a,
                               double epsilon) {
  RequireTerms(terms);
  if (!(epsilon > 0.0)) {
    ThrowValidation("epsilon_range", "epsilon must be positive");
  }
  BoundReport report;
  report.formula_id = "cramer_lower";
  report.direction = BoundDirection::kLower;
  report.inputs = {{"terms", static_cast<double>(terms)},
                   {"a", a},
                   {"epsilon", epsilon}};

  const RateResult r = rate_function(law, a);
  if (r.infinite || r.boundary) {
    report.flag = "outside_hull";
    report.log_value = -kInf;
    Finish(report);
    return report;
  }
  const double eta = r.theta_star;
  const double sigma2 = cumulant(law, eta).second;
  const double n = static_cast<double>(terms);
  const double factor = 1.0 - sigma2 / (n * epsilon * epsilon);
  report.inputs.emplace_back("rate", r.rate);
  report.inputs.emplace_back("eta", eta);
  report.inputs.emplace_back("tilted_variance", sigma2);
  report.log_value = factor > 0.0
                         ? -n * (r.rate + epsilon * std::abs(eta)) +
                               std::log(factor)
                         : -kInf;
  Finish(report);
  return report;
}

BoundReport pnk_theoretical_bound(const ModelParams& params, int k) {
  const int n = params.n();
  if (k < 1 || k > n / 4) {
    ThrowValidation("k_range", "k must lie in [1, " + std::to_string(n / 4) +
                                   "], got " + std::to_string(k));
  }
  const double terms = 2.0 * k * (n / 2 - k);
  BoundReport report;
  report.formula_id = "pnk_theta_half";
  report.direction = BoundDirection::kUpper;
  report.inputs = {{"n", static_cast<double>(n)},
                   {"k", static_cast<double>(k)},
                   {"terms", terms}};
  report.log_value = std::numbers::ln2 + terms * log_mgf(params, 0.5).value;
  Finish(report);
  return report;
}

BoundReport ml_failure_union_bound(const ModelParams& params) {
  const int n = params.n();
  const int half = n / 2;
  const double lambda = log_mgf(params, 0.5).value;
  std::vector<double> logs;
  for (int k = 1; k <= n / 4; ++k) {
    const double terms = 2.0 * k * (half - k);
    logs.push_back(2.0 * LogBinomial(half, k) + std::numbers::ln2 +
                   terms * lambda);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (const double x : logs) sum += std::exp(x - top);

  BoundReport report;
  report.formula_id = "ml_union";
  report.direction = BoundDirection::kUpper;
  report.inputs = {{"n", static_cast<double>(n)},
                   {"k_terms", static_cast<double>(logs.size())}};
  report.log_value = top + std::log(sum);
  Finish(report);
  return report;
}

BoundReport delta_complement_bound(int n, const std::vector<double>& alphas) {
  if (n < 16) {
    ThrowValidation("n_too_small",
                    "iterated logarithms need n >= 16, got " +
                        std::to_string(n));
  }
  double alpha_sum = 0.0;
  for (const double a : alphas) {
    if (!(a > 0.0)) ThrowValidation("nonpositive_rate", "alphas must be > 0");
    alpha_sum += a;
  }
  if (alphas.empty()) ThrowValidation("no_colors", "need at least one alpha");

  const double ln = std::log(static_cast<double>(n));
  const double lnln = std::log(ln);
  const double ln3 = ln * ln * ln;
  BoundReport report;
  report.formula_id = "delta_complement";
  report.direction = BoundDirection::kUpper;
  report.inputs = {{"n", static_cast<double>(n)}, {"alpha_sum", alpha_sum}};
  report.log_value =
      std::log(n / ln3) -
      (ln / lnln) * std::log(ln3 / (std::numbers::e * lnln * alpha_sum));
  Finish(report);
  return report;
}

BoundReport chebyshev_tail(double mean, double variance, double t) {
  if (!(t > 0.0)) ThrowValidation("t_range", "t must be positive");
  if (!(variance >= 0.0)) {
    ThrowValidation("variance_range", "variance must be non-negative");
  }
  BoundReport report;
  report.formula_id = "chebyshev_tail";
  report.direction = BoundDirection::kLower;
  report.inputs = {{"mean", mean}, {"variance", variance}, {"t", t}};
  const double value = 1.0 - variance / (t * t);
  report.log_value = value > 0.0 ? std::log(value) : -kInf;
  Finish(report);
  return report;
}

BoundReport cross_sum_chebyshev_bound(const ModelParams& params, double k) {
  const double n = params.n();
  const double ln = std::log(n);
  const double terms = std::floor(n / (ln * ln * ln));
  if (terms < 1.0) {
    ThrowValidation("n_too_small", "n / ln^3 n must be at least 1");
  }
  const FiniteLaw z = cross_weight_distribution(params);
  double target = 0.0;
  for (int i = 0; i < params.m(); ++i) {
    target += params.betas()[i] * params.weights().values()[i];
  }
  const double threshold = target / (ln * ln) - k;
  const double mean = terms * z.mean();
  const double variance = terms * z.variance();
  const double t = mean - threshold;

  BoundReport report;
  if (t > 0.0) {
    report = chebyshev_tail(mean, variance, t);
  } else {
    report.direction = BoundDirection::kLower;
    report.inputs = {{"mean", mean}, {"variance", variance}, {"t", t}};
    report.log_value = -kInf;
    Finish(report);
  }
  report.formula_id = "cross_sum_chebyshev";
  report.inputs.emplace_back("terms", terms);
  report.inputs.emplace_back("threshold", threshold);
  report.inputs.emplace_back("K", k);
  return report;
}

BoundReport heavy_neighbor_lower_bound(const ModelParams& params) {
  const double n = params.n();
  const double ln = std::log(n);
  const double lnln = std::log(ln);
  if (!(lnln > 0.0)) {
    ThrowValidation("n_too_small", "iterated logarithms need n >= 16");
  }
  const double terms = std::floor(n / 2.0 - n / (ln * ln * ln));
  if (terms < 1.0) ThrowValidation("n_too_small", "no terms left");
  const auto w = params.weights().values();
  const double m_max = *std::max_element(w.begin(), w.end());
  const double epsilon = std::pow(ln, 2.0 / 3.0) / n;
  const double a = m_max * ln / (terms * lnln) + epsilon;

  BoundReport report =
      cramer_lower_bound(pair_diff_distribution(params).law,
                         static_cast<long long>(terms), a, epsilon);
  report.formula_id = "heavy_neighbor_lower";
  report.inputs.emplace_back("max_weight", m_max);
  report.inputs.emplace_back(
      "asymptotic_log_value",
      -0.5 * ln * divergence_sum(params.alphas(), params.betas()));
  return report;
}

}  // namespace csbm
