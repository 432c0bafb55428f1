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

#include "csbm/ldp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "csbm/error.h"

namespace csbm {

FiniteLaw::FiniteLaw(std::vector<Atom> atoms) {
  double mass = 0.0;
  for (const auto& atom : atoms) {
    if (!std::isfinite(atom.value) || !std::isfinite(atom.prob)) {
      ThrowValidation("law_atom", "law atoms must be finite");
    }
    if (atom.prob < 0.0) {
      ThrowValidation("law_atom", "negative atom probability");
    }
    mass += atom.prob;
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    ThrowValidation("law_mass", "law probabilities sum to " +
                                    std::to_string(mass) + ", expected 1");
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.value < y.value; });
  for (const auto& atom : atoms) {
    if (!atoms_.empty() &&
        atom.value - atoms_.back().value <= kAtomMergeTolerance) {
      atoms_.back().prob += atom.prob;
    } else {
      atoms_.push_back(atom);
    }
  }
  std::erase_if(atoms_, [](const Atom& x) { return x.prob == 0.0; });
  if (atoms_.empty()) ThrowValidation("law_mass", "law has no mass");
}

double FiniteLaw::total_mass() const {
  double mass = 0.0;
  for (const auto& atom : atoms_) mass += atom.prob;
  return mass;
}

double FiniteLaw::mean() const {
  double total = 0.0;
  for (const auto& atom : atoms_) total += atom.prob * atom.value;
  return total;
}

double FiniteLaw::variance() const {
  const double mu = mean();
  double total = 0.0;
  for (const auto& atom : atoms_) {
    const double d = atom.value - mu;
    total += atom.prob * d * d;
  }
  return total;
}

CumulantPoint cumulant(const FiniteLaw& law, double theta) {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& atom : law.atoms()) {
    shift = std::max(shift, theta * atom.value);
  }
  double s0 = 0.0;
  double s1 = 0.0;
  for (const auto& atom : law.atoms()) {
    const double t = atom.prob * std::exp(theta * atom.value - shift);
    s0 += t;
    s1 += t * atom.value;
  }
  const double tilted_mean = s1 / s0;
  double s2 = 0.0;
  for (const auto& atom : law.atoms()) {
    const double d = atom.value - tilted_mean;
    s2 += atom.prob * std::exp(theta * atom.value - shift) * d * d;
  }
  return {shift + std::log(s0), tilted_mean, s2 / s0};
}

PairDiffDistribution pair_diff_distribution(const ModelParams& params) {
  const int m = params.m();
  const auto w = params.weights().values();
  const double ps = params.p_star();
  const double qs = params.q_star();

  std::vector<Atom> atoms;
  atoms.reserve(1 + 2 * m + m * (m - 1));
  // Both pairs show the same outcome: same color or both empty.
  double same = (1.0 - ps) * (1.0 - qs);
  for (int k = 0; k < m; ++k) same += params.p(k) * params.q(k);
  atoms.push_back({0.0, same});
  for (int i = 0; i < m; ++i) {
    // Cross pair colored i, within pair empty.
    atoms.push_back({w[i], (1.0 - ps) * params.q(i)});
    // Within pair colored i, cross pair empty.
    atoms.push_back({-w[i], params.p(i) * (1.0 - qs)});
  }
  // Within pair colored i, cross pair colored j.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) atoms.push_back({w[j] - w[i], params.p(i) * params.q(j)});
    }
  }
  const int raw = static_cast<int>(atoms.size());
  return {FiniteLaw(std::move(atoms)), raw};
}

FiniteLaw cross_weight_distribution(const ModelParams& params) {
  std::vector<Atom> atoms{{0.0, 1.0 - params.q_star()}};
  for (int i = 0; i < params.m(); ++i) {
    atoms.push_back({params.weights().values()[i], params.q(i)});
  }
  return FiniteLaw(std::move(atoms));
}

FiniteLaw within_weight_distribution(const ModelParams& params) {
  std::vector<Atom> atoms{{0.0, 1.0 - params.p_star()}};
  for (int i = 0; i < params.m(); ++i) {
    atoms.push_back({params.weights().values()[i], params.p(i)});
  }
  return FiniteLaw(std::move(atoms));
}

ExpansionTerms expansion_terms(const ModelParams& params, double theta) {
  const auto& alpha = params.alphas();
  const auto& beta = params.betas();
  const auto w = params.weights().values();
  const double as = params.alpha_star();
  const double bs = params.beta_star();
  const int m = params.m();

  ExpansionTerms t;
  t.d = as * bs;
  for (int i = 0; i < m; ++i) {
    // alpha_i (beta_i/alpha_i)^theta and beta_i (alpha_i/beta_i)^theta.
    const double down = alpha[i] * std::exp(-theta * w[i]);
    const double up = beta[i] * std::exp(theta * w[i]);
    const double w2 = w[i] * w[i];
    t.c += alpha[i] * std::expm1(-theta * w[i]) +
           beta[i] * std::expm1(theta * w[i]);
    t.c1 += (up - down) * w[i];
    t.c2 += (up + down) * w2;

    t.d += alpha[i] * beta[i];
    t.d -= as * up + bs * down;
    t.d1 -= (as * up - bs * down) * w[i];
    t.d2 -= (as * up + bs * down) * w2;
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double shift = w[j] - w[i];
      const double cross = alpha[i] * beta[j] * std::exp(theta * shift);
      t.d += cross;
      t.d1 += cross * shift;
      t.d2 += cross * shift * shift;
    }
  }
  return t;
}

MgfEvaluation log_mgf(const ModelParams& params, double theta) {
  if (!std::isfinite(theta) || std::abs(theta) > kThetaBracket) {
    ThrowRuntime("mgf_overflow", "theta = " + std::to_string(theta) +
                                     " outside the supported range [-64, 64]");
  }
  const auto law = pair_diff_distribution(params).law;
  const auto terms = expansion_terms(params, theta);
  return {cumulant(law, theta).value, terms.c, terms.d};
}

CumulantPoint log_mgf_from_expansion(const ModelParams& params, double theta) {
  const auto t = expansion_terms(params, theta);
  const double l = params.scale();
  const double f = 1.0 + t.c * l + t.d * l * l;
  const double f1 = t.c1 * l + t.d1 * l * l;
  const double f2 = t.c2 * l + t.d2 * l * l;
  const double first = f1 / f;
  return {std::log1p(t.c * l + t.d * l * l), first, f2 / f - first * first};
}

RateResult rate_function(const FiniteLaw& law, double a) {
  RateResult result;
  result.a = a;
  const double lo = law.min_value();
  const double hi = law.max_value();
  const double edge_tol = kAtomMergeTolerance * std::max(1.0, std::abs(a));

  if (a < lo - edge_tol || a > hi + edge_tol) {
    result.rate = std::numeric_limits<double>::infinity();
    result.theta_star = a > hi ? kThetaBracket : -kThetaBracket;
    result.infinite = true;
    return result;
  }
  if (hi - lo <= edge_tol) {
    // Point mass at a.
    return result;
  }
  if (std::abs(a - hi) <= edge_tol || std::abs(a - lo) <= edge_tol) {
    const bool top = std::abs(a - hi) <= edge_tol;
    const Atom& atom = top ? law.atoms().back() : law.atoms().front();
    result.rate = -std::log(atom.prob);
    result.theta_star = top ? kThetaBracket : -kThetaBracket;
    result.boundary = true;
    return result;
  }

  auto objective = [&](double theta) {
    return theta * a - cumulant(law, theta).value;
  };

  double left = -kThetaBracket;
  double right = kThetaBracket;
  if (cumulant(law, right).first < a) {
    result.theta_star = right;
    result.rate = std::max(0.0, objective(right));
    result.boundary = true;
    return result;
  }
  if (cumulant(law, left).first > a) {
    result.theta_star = left;
    result.rate = std::max(0.0, objective(left));
    result.boundary = true;
    return result;
  }

  int iterations = 0;
  while (right - left > 1e-10) {
    const double mid = 0.5 * (left + right);
    if (cumulant(law, mid).first < a) {
      left = mid;
    } else {
      right = mid;
    }
    ++iterations;
  }
  double theta = 0.5 * (left + right);
  for (int step = 0; step < 4; ++step) {
    const auto point = cumulant(law, theta);
    if (!(point.second > 0.0)) break;
    const double next = theta - (point.first - a) / point.second;
    ++iterations;
    if (!(next >= left - 1e-10 && next <= right + 1e-10)) break;
    const bool done = std::abs(next - theta) <= 1e-15;
    theta = next;
    if (done) break;
  }

  result.theta_star = theta;
  // theta = 0 always attains 0, so the supremum is never negative.
  result.rate = std::max(0.0, objective(theta));
  result.iterations = iterations;
  return result;
}

}  // namespace csbm
