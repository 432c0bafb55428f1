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

#include "csbm/decoder.h"
#include "csbm/error.h"
#include "csbm/rng.h"
#include "csbm/sampler.h"
#include "csbm/sweep.h"
#include "doctest.h"
#include "json.hpp"

namespace csbm {
namespace {

using nlohmann::json;

json BaseConfig() {
  return {{"base_alphas", {2.0}}, {"base_betas", {0.5}},
          {"scale_grid", {0.5, 1.0}}, {"n_list", {8}},
          {"trials", 20}, {"seed", 3}, {"decoder", "exact"}};
}

std::string MessageOf(const json& j) {
  try {
    sweep_config_from_json(j);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kValidation);
    return e.what();
  }
  return "";
}

TEST_CASE("sweep config parses and validates every field") {
  const auto config = sweep_config_from_json(BaseConfig());
  CHECK(config.trials == 20);
  CHECK(config.decoder == DecoderKind::kExact);

  json bad = BaseConfig();
  bad.erase("seed");
  bad["trials"] = "many";
  bad["decoder"] = "greedy";
  const std::string message = MessageOf(bad);
  CHECK(message.find("seed: missing") != std::string::npos);
  CHECK(message.find("trials: wrong type") != std::string::npos);
  CHECK(message.find("decoder: expected") != std::string::npos);

  bad = BaseConfig();
  bad["scale_grid"] = json::array();
  bad["trials"] = 0;
  bad["n_list"] = {8, 30};
  const std::string second = MessageOf(bad);
  CHECK(second.find("scale_grid: empty") != std::string::npos);
  CHECK(second.find("trials: must be >= 1") != std::string::npos);
  CHECK(second.find("exact decoder needs n <= 24") != std::string::npos);
}

TEST_CASE("sweep cells with inadmissible params carry the model tag") {
  json bad = BaseConfig();
  bad["scale_grid"] = {1.0, 100.0};
  try {
    sweep_config_from_json(bad);
    FAIL("expected within_mass");
  } catch (const Error& e) {
    CHECK(e.tag() == "within_mass");
  }
}

TEST_CASE("sweep rows recompute the divergence") {
  const auto result = run_sweep(sweep_config_from_json(BaseConfig()), 1);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].divergence ==
        doctest::Approx(std::pow(1.0 - std::sqrt(0.5), 2)));
  CHECK(result.rows[1].divergence ==
        doctest::Approx(std::pow(std::sqrt(2.0) - std::sqrt(0.5), 2)));
  for (const auto& row : result.rows) {
    CHECK(row.success_rate >= 0.0);
    CHECK(row.success_rate <= 1.0);
    CHECK(row.failure_event_rate >= 0.0);
    CHECK(row.failure_event_rate <= 1.0);
    CHECK(row.mean_score_gap >= -1e-9);
    CHECK(row.seed == 3);
    CHECK(row.trials == 20);
  }
}

TEST_CASE("sweep output is independent of thread count") {
  json j = BaseConfig();
  j["n_list"] = {8, 10};
  j["trials"] = 50;
  const auto config = sweep_config_from_json(j);
  const std::string one = sweep_csv(run_sweep(config, 1));
  CHECK(one == sweep_csv(run_sweep(config, 8)));
  CHECK(one == sweep_csv(run_sweep(config, 3)));
  CHECK(one.rfind(std::string(kSweepCsvHeader) + "\n", 0) == 0);
  CHECK(sweep_json(run_sweep(config, 2)) == sweep_json(run_sweep(config, 5)));
}

TEST_CASE("near-zero divergence sits at chance level at n=8") {
  // With alpha barely above beta the planted partition is as likely as any
  // of the 35 others to be the unique maximizer; ties count as failures.
  const int64_t trials = 2000;
  json j = {{"base_alphas", {1.0}}, {"base_betas", {1.0}},
            {"scale_grid", {1.0001}}, {"n_list", {8}},
            {"trials", trials}, {"seed", 17}, {"decoder", "exact"}};
  const auto row = run_sweep(sweep_config_from_json(j), 2).rows.at(0);

  const auto params = make_params(8, {1.0001}, {1.0});
  int64_t ties = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const auto planted = Partition::RandomBalanced(8, DeriveSeed(999, t, 1));
    const auto g = sample_graph(params, planted, DeriveSeed(999, t, 2));
    ties += ml_decode_exact(g, params.weights()).tie;
  }
  const double tie_rate = static_cast<double>(ties) / trials;
  const double expected = (1.0 - tie_rate) / 35.0;
  const double sigma = std::sqrt(expected * (1 - expected) / trials) +
                       std::sqrt(tie_rate * (1 - tie_rate) / trials) / 35.0;
  CHECK(std::abs(row.success_rate - expected) <= 3 * sigma);
}

TEST_CASE("exact success grows with divergence at n=10") {
  json j = {{"base_alphas", {1.0}}, {"base_betas", {0.01}},
            {"scale_grid", {0.05, 0.2, 0.5, 1.0, 2.0, 4.0}}, {"n_list", {10}},
            {"trials", 200}, {"seed", 5}, {"decoder", "exact"}};
  const auto result = run_sweep(sweep_config_from_json(j), 2);
  for (size_t i = 1; i < result.rows.size(); ++i) {
    const double p = result.rows[i - 1].success_rate;
    const double q = result.rows[i].success_rate;
    const double sigma = std::sqrt((p * (1 - p) + q * (1 - q)) / 200.0);
    CHECK(q >= p - 3 * sigma);
  }
  CHECK(result.rows.back().success_rate > result.rows.front().success_rate);
}

TEST_CASE("local and vertex-test decoders") {
  json j = {{"base_alphas", {16.0}}, {"base_betas", {1.0}},
            {"scale_grid", {1.0}}, {"n_list", {300}},
            {"trials", 20}, {"seed", 1}, {"decoder", "local"}};
  const auto local = run_sweep(sweep_config_from_json(j), 2).rows.at(0);
  CHECK(local.success_rate >= 0.8);
  j["decoder"] = "vertex-test";
  const auto vt = run_sweep(sweep_config_from_json(j), 2).rows.at(0);
  CHECK(vt.success_rate >= 0.8);
  CHECK(vt.failure_event_rate <= 1.0 - vt.success_rate);
  CHECK(vt.mean_score_gap >= 0.0);
}

TEST_CASE("sweep JSON rows mirror the CSV columns") {
  const auto json_rows = sweep_json(run_sweep(sweep_config_from_json(BaseConfig()), 1));
  REQUIRE(json_rows.size() == 2);
  for (const char* key : {"n", "scale", "divergence", "success_rate",
                          "failure_event_rate", "mean_score_gap", "trials",
                          "seed"}) {
    CHECK(json_rows[0].contains(key));
  }
}

}  // namespace
}  // namespace csbm
