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

#include "csbm/sweep.h"

#include <cinttypes>
#include <cstdio>

#include "csbm/decoder.h"
#include "csbm/error.h"
#include "csbm/model.h"
#include "csbm/parallel.h"
#include "csbm/partition.h"
#include "csbm/rng.h"
#include "csbm/sampler.h"

namespace csbm {
namespace {

std::vector<double> Scaled(const std::vector<double>& v, double s) {
  std::vector<double> out(v);
  for (auto& x : out) x *= s;
  return out;
}

struct TrialOutcome {
  bool success = false;
  bool failure_event = false;
  double gap = 0.0;
};

TrialOutcome RunTrial(const SweepConfig& config, const ModelParams& params,
                      uint64_t trial_seed) {
  const Partition planted =
      Partition::RandomBalanced(params.n(), DeriveSeed(trial_seed, 1));
  const ColoredGraph graph =
      sample_graph(params, planted, DeriveSeed(trial_seed, 2));
  const Weights& w = params.weights();
  const double planted_score = score_partition(graph, w, planted);
  const FailureReport failures = vertex_failure_events(graph, w, planted);

  TrialOutcome out;
  out.failure_event = failures.f_a && failures.f_b;
  switch (config.decoder) {
    case DecoderKind::kExact: {
      const DecodeResult r = ml_decode_exact(graph, w);
      out.success = !r.tie && partitions_equal_up_to_swap(r.best, planted);
      out.gap = r.best_score - planted_score;
      break;
    }
    case DecoderKind::kLocal: {
      const Partition refined =
          local_refine(graph, w, planted, config.max_rounds);
      out.success = partitions_equal_up_to_swap(refined, planted);
      out.gap = score_partition(graph, w, refined) - planted_score;
      break;
    }
    case DecoderKind::kVertexTest: {
      out.success = !failures.f_a && !failures.f_b;
      const auto move = best_swap(graph, w, planted);
      out.gap = move ? move->gain : 0.0;
      break;
    }
  }
  return out;
}

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  std::vector<std::string> problems;
  SweepConfig config;
  auto read = [&](const char* field, auto& target) {
    if (!j.contains(field)) {
      problems.push_back(std::string(field) + ": missing");
      return;
    }
    try {
      j.at(field).get_to(target);
    } catch (const nlohmann::json::exception&) {
      problems.push_back(std::string(field) + ": wrong type");
    }
  };
  if (!j.is_object()) {
    ThrowValidation("sweep_config", "sweep config must be a JSON object");
  }
  read("base_alphas", config.base_alphas);
  read("base_betas", config.base_betas);
  read("scale_grid", config.scale_grid);
  read("n_list", config.n_list);
  read("trials", config.trials);
  read("seed", config.seed);
  std::string decoder;
  read("decoder", decoder);
  if (j.contains("max_rounds")) read("max_rounds", config.max_rounds);
  if (decoder == "exact") {
    config.decoder = DecoderKind::kExact;
  } else if (decoder == "local") {
    config.decoder = DecoderKind::kLocal;
  } else if (decoder == "vertex-test") {
    config.decoder = DecoderKind::kVertexTest;
  } else if (j.contains("decoder")) {
    problems.push_back("decoder: expected exact, local or vertex-test");
  }
  if (!problems.empty()) {
    std::string message = "invalid sweep config:";
    for (const auto& p : problems) message += " [" + p + "]";
    ThrowValidation("sweep_config", message);
  }
  validate_sweep_config(config);
  return config;
}

void validate_sweep_config(const SweepConfig& config) {
  std::vector<std::string> problems;
  if (config.base_alphas.empty()) problems.push_back("base_alphas: empty");
  if (config.base_alphas.size() != config.base_betas.size()) {
    problems.push_back("base_betas: length differs from base_alphas");
  }
  if (config.scale_grid.empty()) problems.push_back("scale_grid: empty");
  for (const double s : config.scale_grid) {
    if (!(s > 0.0)) problems.push_back("scale_grid: entries must be > 0");
  }
  if (config.n_list.empty()) problems.push_back("n_list: empty");
  if (config.trials < 1) problems.push_back("trials: must be >= 1");
  if (config.max_rounds < 0) problems.push_back("max_rounds: must be >= 0");
  if (config.decoder == DecoderKind::kExact) {
    for (const int n : config.n_list) {
      if (n > kDefaultExactCap) {
        problems.push_back("n_list: exact decoder needs n <= " +
                           std::to_string(kDefaultExactCap) + ", got " +
                           std::to_string(n));
      }
    }
  }
  if (!problems.empty()) {
    std::string message = "invalid sweep config:";
    for (const auto& p : problems) message += " [" + p + "]";
    ThrowValidation("sweep_config", message);
  }
  for (const int n : config.n_list) {
    for (const double s : config.scale_grid) {
      try {
        make_params(n, Scaled(config.base_alphas, s), config.base_betas);
      } catch (const Error& e) {
        ThrowValidation(e.tag(), "cell n=" + std::to_string(n) + ", scale=" +
                                     FormatDouble(s) + ": " + e.what());
      }
    }
  }
}

SweepResult run_sweep(const SweepConfig& config, int threads) {
  validate_sweep_config(config);
  std::vector<ModelParams> cells;
  for (const int n : config.n_list) {
    for (const double s : config.scale_grid) {
      cells.push_back(
          make_params(n, Scaled(config.base_alphas, s), config.base_betas));
    }
  }

  const int64_t trials = config.trials;
  const int64_t tasks = static_cast<int64_t>(cells.size()) * trials;
  std::vector<TrialOutcome> outcomes(tasks);
  ParallelFor(tasks, threads, [&](int64_t task) {
    const int64_t cell = task / trials;
    const int64_t trial = task % trials;
    outcomes[task] = RunTrial(config, cells[cell],
                              DeriveSeed(config.seed, cell, trial));
  });

  SweepResult result;
  for (size_t cell = 0; cell < cells.size(); ++cell) {
    SweepRow row;
    row.n = cells[cell].n();
    row.scale = config.scale_grid[cell % config.scale_grid.size()];
    row.divergence =
        divergence_sum(cells[cell].alphas(), cells[cell].betas());
    int64_t successes = 0;
    int64_t events = 0;
    double gap = 0.0;
    for (int64_t t = 0; t < trials; ++t) {
      const auto& o = outcomes[cell * trials + t];
      successes += o.success;
      events += o.failure_event;
      gap += o.gap;
    }
    row.success_rate = static_cast<double>(successes) / trials;
    row.failure_event_rate = static_cast<double>(events) / trials;
    row.mean_score_gap = gap / trials;
    row.trials = trials;
    row.seed = config.seed;
    result.rows.push_back(row);
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.n) + "," + FormatDouble(r.scale) + "," +
           FormatDouble(r.divergence) + "," + FormatDouble(r.success_rate) +
           "," + FormatDouble(r.failure_event_rate) + "," +
           FormatDouble(r.mean_score_gap) + "," + std::to_string(r.trials) +
           "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

nlohmann::json sweep_json(const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"n", r.n},
                    {"scale", r.scale},
                    {"divergence", r.divergence},
                    {"success_rate", r.success_rate},
                    {"failure_event_rate", r.failure_event_rate},
                    {"mean_score_gap", r.mean_score_gap},
                    {"trials", r.trials},
                    {"seed", r.seed}});
  }
  return rows;
}

}  // namespace csbm
