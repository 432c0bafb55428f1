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

#ifndef CSBM_ORACLE_H_
#define CSBM_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "csbm/decoder.h"
#include "csbm/graph.h"
#include "csbm/ldp.h"
#include "csbm/model.h"
#include "csbm/partition.h"

namespace csbm::oracle {

inline constexpr int kEnumerationCap = 24;

// All C(n, n/2)/2 balanced partitions with vertex 0 in A, in lexicographic
// order of their label strings.
std::vector<Partition> enumerate_balanced_partitions(int n);

// Same contract as ml_decode_exact, computed from a dense pair-weight table
// over the lexicographic enumeration above.
DecodeResult brute_force_ml(const ColoredGraph& graph, const Weights& weights);

// Law of a sum of i.i.d. finite-support draws. Atoms are sorted, merged
// within kAtomMergeTolerance, and carry strictly positive probability.
class ExactLaw {
 public:
  explicit ExactLaw(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::span<const Atom> atoms() const { return atoms_; }
  double total_mass() const;
  // P(S >= t). Atoms within kValueResolution below t count as >= t.
  double tail_at_least(double t) const;
  // P(lo < S < hi), excluding atoms within kValueResolution of either end.
  double probability_in_open(double lo, double hi) const;

  static constexpr double kValueResolution = 1e-9;

 private:
  std::vector<Atom> atoms_;
};

inline constexpr int64_t kExactLawAtomCap = 1'000'000;

// N-fold convolution by repeated merge-convolve. Throws RuntimeError
// "oracle_blowup" once the merged support exceeds kExactLawAtomCap.
ExactLaw exact_sum_distribution(std::span<const Atom> law, int terms);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // binomial sqrt(p (1 - p) / trials)
  int64_t hits = 0;
  int64_t trials = 0;
};

// Estimates P(sum_{2k(n/2-k) terms} (Z - W) >= 0) by drawing each cross pair
// Z and within pair W directly from the q and p categoricals. Each trial
// uses its own stream derived from (seed, trial).
McEstimate monte_carlo_pnk(const ModelParams& params, int k, int64_t trials,
                           uint64_t seed, int threads = 1);

}  // namespace csbm::oracle

#endif  // CSBM_ORACLE_H_
