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

#ifndef CSBM_MODEL_H_
#define CSBM_MODEL_H_

#include <span>
#include <vector>

namespace csbm {

// Per-color log-likelihood ratios w_i = ln(alpha_i / beta_i), which equal
// ln(p_i / q_i) because the ln(n)/n factor cancels. Colors are 1-based in
// graphs; index c - 1 here.
class Weights {
 public:
  Weights() = default;
  explicit Weights(std::vector<double> values) : values_(std::move(values)) {}

  int m() const { return static_cast<int>(values_.size()); }
  double of_color(int color) const { return values_[color - 1]; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// Two equal communities of n/2 vertices. Within a community each pair draws
// color i with probability p_i = alpha_i ln(n)/n (no edge otherwise); across
// communities with q_i = beta_i ln(n)/n. Immutable once built.
class ModelParams {
 public:
  // Throws ValidationError tagged odd_n, n_too_small, no_colors,
  // length_mismatch, nonpositive_rate, within_mass, cross_mass or
  // identical_rates.
  static ModelParams Make(int n, std::vector<double> alphas,
                          std::vector<double> betas);

  int n() const { return n_; }
  int m() const { return static_cast<int>(alphas_.size()); }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }

  // ln(n)/n, the common scale of every edge probability.
  double scale() const { return scale_; }
  // 0-based color index.
  double p(int index) const { return alphas_[index] * scale_; }
  double q(int index) const { return betas_[index] * scale_; }
  std::vector<double> within_probs() const;
  std::vector<double> cross_probs() const;

  double alpha_star() const { return alpha_star_; }
  double beta_star() const { return beta_star_; }
  double p_star() const { return alpha_star_ * scale_; }
  double q_star() const { return beta_star_ * scale_; }

  const Weights& weights() const { return weights_; }

 private:
  ModelParams() = default;

  int n_ = 0;
  std::vector<double> alphas_;
  std::vector<double> betas_;
  double scale_ = 0.0;
  double alpha_star_ = 0.0;
  double beta_star_ = 0.0;
  Weights weights_;
};

inline ModelParams make_params(int n, std::vector<double> alphas,
                               std::vector<double> betas) {
  return ModelParams::Make(n, std::move(alphas), std::move(betas));
}

// sum_i (sqrt(alpha_i) - sqrt(beta_i))^2, the quantity compared against 2 by
// the exact-recovery threshold.
double divergence_sum(std::span<const double> alphas,
                      std::span<const double> betas);

// Squared Hellinger distance between the (m+1)-outcome within and cross
// laws, the no-edge outcome included.
double hellinger_sq(const ModelParams& params);

struct DivergenceReport {
  double d_plus = 0.0;
  double hellinger_sq = 0.0;
  // hellinger_sq * n / ln(n); tends to d_plus as n grows.
  double n_normalized = 0.0;
};

DivergenceReport divergence_report(const ModelParams& params);

}  // namespace csbm

#endif  // CSBM_MODEL_H_
