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

#include "csbm/model.h"

#include <cmath>
#include <numeric>
#include <string>

#include "csbm/error.h"

namespace csbm {

ModelParams ModelParams::Make(int n, std::vector<double> alphas,
                              std::vector<double> betas) {
  if (n % 2 != 0) {
    ThrowValidation("odd_n", "n must be even, got " + std::to_string(n));
  }
  if (n < 4) {
    ThrowValidation("n_too_small", "n must be at least 4, got " +
                                       std::to_string(n));
  }
  if (alphas.empty()) ThrowValidation("no_colors", "at least one color needed");
  if (alphas.size() != betas.size()) {
    ThrowValidation("length_mismatch", "alphas and betas differ in length");
  }
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0) || !(betas[i] > 0.0) || !std::isfinite(alphas[i]) ||
        !std::isfinite(betas[i])) {
      ThrowValidation("nonpositive_rate",
                      "alpha and beta entries must be positive and finite "
                      "(color " + std::to_string(i + 1) + ")");
    }
  }

  ModelParams params;
  params.n_ = n;
  params.scale_ = std::log(static_cast<double>(n)) / n;
  params.alpha_star_ = std::accumulate(alphas.begin(), alphas.end(), 0.0);
  params.beta_star_ = std::accumulate(betas.begin(), betas.end(), 0.0);
  if (params.alpha_star_ * params.scale_ >= 1.0) {
    ThrowValidation("within_mass",
                    "sum of within-community probabilities must be < 1, got " +
                        std::to_string(params.alpha_star_ * params.scale_));
  }
  if (params.beta_star_ * params.scale_ >= 1.0) {
    ThrowValidation("cross_mass",
                    "sum of cross-community probabilities must be < 1, got " +
                        std::to_string(params.beta_star_ * params.scale_));
  }
  if (alphas == betas) {
    ThrowValidation("identical_rates",
                    "alphas equal betas: communities are unidentifiable");
  }

  std::vector<double> w(alphas.size());
  for (size_t i = 0; i < alphas.size(); ++i) {
    w[i] = std::log1p((alphas[i] - betas[i]) / betas[i]);
  }
  params.weights_ = Weights(std::move(w));
  params.alphas_ = std::move(alphas);
  params.betas_ = std::move(betas);
  return params;
}

std::vector<double> ModelParams::within_probs() const {
  std::vector<double> out(alphas_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = alphas_[i] * scale_;
  return out;
}

std::vector<double> ModelParams::cross_probs() const {
  std::vector<double> out(betas_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = betas_[i] * scale_;
  return out;
}

double divergence_sum(std::span<const double> alphas,
                      std::span<const double> betas) {
  if (alphas.size() != betas.size()) {
    ThrowValidation("length_mismatch", "alphas and betas differ in length");
  }
  double total = 0.0;
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0) || !(betas[i] > 0.0)) {
      ThrowValidation("nonpositive_rate", "entries must be positive");
    }
    const double d =
        (alphas[i] - betas[i]) / (std::sqrt(alphas[i]) + std::sqrt(betas[i]));
    total += d * d;
  }
  return total;
}

double hellinger_sq(const ModelParams& params) {
  double total = 0.0;
  for (int i = 0; i < params.m(); ++i) {
    const double d = (params.p(i) - params.q(i)) /
                     (std::sqrt(params.p(i)) + std::sqrt(params.q(i)));
    total += d * d;
  }
  // sqrt(1-P) - sqrt(1-Q) as (Q-P) / (sqrt(1-P) + sqrt(1-Q)).
  const double ps = params.p_star();
  const double qs = params.q_star();
  const double none =
      (qs - ps) / (std::sqrt(1.0 - ps) + std::sqrt(1.0 - qs));
  return total + none * none;
}

DivergenceReport divergence_report(const ModelParams& params) {
  DivergenceReport report;
  report.d_plus = divergence_sum(params.alphas(), params.betas());
  report.hellinger_sq = hellinger_sq(params);
  report.n_normalized = report.hellinger_sq / params.scale();
  return report;
}

}  // namespace csbm
