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

#ifndef CSBM_SWEEP_H_
#define CSBM_SWEEP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace csbm {

enum class DecoderKind { kExact, kLocal, kVertexTest };

// Phase-transition experiment. Each scale multiplies the base alphas only.
struct SweepConfig {
  std::vector<double> base_alphas;
  std::vector<double> base_betas;
  std::vector<double> scale_grid;
  std::vector<int> n_list;
  int64_t trials = 1;
  uint64_t seed = 0;
  DecoderKind decoder = DecoderKind::kExact;
  // Swap budget for DecoderKind::kLocal.
  int max_rounds = 1000;
};

// Throws ValidationError "sweep_config" listing every offending field, or
// the model's own tag when a (n, scale) cell is not a valid model.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
void validate_sweep_config(const SweepConfig& config);

struct SweepRow {
  int n = 0;
  double scale = 0.0;
  double divergence = 0.0;  // recomputed from the scaled alphas
  double success_rate = 0.0;
  // Fraction of trials where both community-level vertex witnesses occur.
  double failure_event_rate = 0.0;
  double mean_score_gap = 0.0;
  int64_t trials = 0;
  uint64_t seed = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // n-major, then scale, in config order
};

// Success per trial:
//   exact        planted is the unique maximizer (ties count as failure);
//   local        swap refinement started at the planted partition leaves it
//                unchanged up to swap;
//   vertex-test  no vertex witness on either side.
// The score gap is decoder score minus planted score (vertex-test: the best
// single-swap gain, or 0). Trial seeds derive from (seed, cell, trial).
SweepResult run_sweep(const SweepConfig& config, int threads);

inline constexpr const char* kSweepCsvHeader =
    "n,scale,divergence,success_rate,failure_event_rate,mean_score_gap,"
    "trials,seed";

std::string sweep_csv(const SweepResult& result);
nlohmann::json sweep_json(const SweepResult& result);

}  // namespace csbm

#endif  // CSBM_SWEEP_H_
