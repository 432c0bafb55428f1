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

#ifndef CSBM_LDP_H_
#define CSBM_LDP_H_

#include <span>
#include <vector>

#include "csbm/model.h"

namespace csbm {

struct Atom {
  double value = 0.0;
  double prob = 0.0;
};

// Atoms closer than this are merged when a law is built.
inline constexpr double kAtomMergeTolerance = 1e-12;

// Finite-support probability law. Atoms are sorted by value, merged within
// kAtomMergeTolerance, and zero-probability atoms are dropped.
class FiniteLaw {
 public:
  // Throws ValidationError when a value is non-finite, a probability is
  // negative, or the total mass is off from 1 by more than 1e-9.
  explicit FiniteLaw(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  double min_value() const { return atoms_.front().value; }
  double max_value() const { return atoms_.back().value; }
  double total_mass() const;
  double mean() const;
  double variance() const;

 private:
  std::vector<Atom> atoms_;
};

// Log-MGF Lambda(theta) = ln E[exp(theta X)] with its first two derivatives,
// which are the mean and variance of the theta-tilted law.
struct CumulantPoint {
  double value = 0.0;
  double first = 0.0;
  double second = 0.0;
};

CumulantPoint cumulant(const FiniteLaw& law, double theta);

// Law of Z - W for one cross pair (Z) and one within pair (W), each scored by
// the ML weight of its color (0 for no edge).
struct PairDiffDistribution {
  FiniteLaw law;
  // Atoms before merging: 1 + 2m + m(m-1).
  int raw_atom_count = 0;
};

PairDiffDistribution pair_diff_distribution(const ModelParams& params);
// Z alone: w_i with probability q_i, 0 otherwise.
FiniteLaw cross_weight_distribution(const ModelParams& params);
// W alone: w_i with probability p_i, 0 otherwise.
FiniteLaw within_weight_distribution(const ModelParams& params);

// Supported |theta| range; beyond it exp(theta * atom) leaves double range
// for admissible parameters.
inline constexpr double kThetaBracket = 64.0;

// E[exp(theta (Z - W))] = 1 + C(theta) L + D(theta) L^2 with L = ln(n)/n
// holds exactly for this finite law.
struct ExpansionTerms {
  double c = 0.0, c1 = 0.0, c2 = 0.0;  // C and its first two derivatives
  double d = 0.0, d1 = 0.0, d2 = 0.0;  // D and its first two derivatives
};

ExpansionTerms expansion_terms(const ModelParams& params, double theta);

struct MgfEvaluation {
  double value = 0.0;  // ln E[exp(theta (Z - W))], summed over the atoms
  double c_theta = 0.0;
  double d_theta = 0.0;
};

// Throws RuntimeError "mgf_overflow" when |theta| > kThetaBracket.
MgfEvaluation log_mgf(const ModelParams& params, double theta);

// ln(1 + C L + D L^2) and its derivatives, computed only from the C/D forms.
CumulantPoint log_mgf_from_expansion(const ModelParams& params, double theta);

struct RateResult {
  double a = 0.0;
  double rate = 0.0;  // +inf when a lies outside the support hull
  double theta_star = 0.0;
  int iterations = 0;
  bool infinite = false;
  // The supremum is not attained inside [-kThetaBracket, kThetaBracket]:
  // a sits on (or numerically next to) the support boundary.
  bool boundary = false;
};

// I(a) = sup_theta (theta a - Lambda(theta)). Bisection on Lambda'(theta) = a
// over the bracket, then Newton polish to |dtheta| <= 1e-10. At the support
// maximum (minimum) the rate is -ln P(X = max) (resp. min).
RateResult rate_function(const FiniteLaw& law, double a);

}  // namespace csbm

#endif  // CSBM_LDP_H_
