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

#include "csbm/json_io.h"

#include <cmath>

#include "csbm/error.h"

namespace csbm {
namespace {

nlohmann::json Number(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json params_to_json(const ModelParams& params) {
  return {{"n", params.n()},
          {"alphas", params.alphas()},
          {"betas", params.betas()}};
}

ModelParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("alphas") ||
      !j.contains("betas")) {
    ThrowValidation("params_json",
                    "params need fields \"n\", \"alphas\" and \"betas\"");
  }
  try {
    return make_params(j.at("n").get<int>(),
                       j.at("alphas").get<std::vector<double>>(),
                       j.at("betas").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    ThrowValidation("params_json", std::string("bad params field: ") + e.what());
  }
}

nlohmann::json to_json(const DecodeResult& result) {
  return {{"labels", result.best.ToString()},
          {"score", result.best_score},
          {"tie", result.tie},
          {"explored", result.explored}};
}

nlohmann::json to_json(const DivergenceReport& report) {
  return {{"d_plus", report.d_plus},
          {"hellinger_sq", report.hellinger_sq},
          {"n_normalized", report.n_normalized}};
}

nlohmann::json to_json(const RateResult& result) {
  return {{"a", result.a},
          {"rate", Number(result.rate)},
          {"theta_star", result.theta_star},
          {"iterations", result.iterations},
          {"infinite", result.infinite},
          {"boundary", result.boundary}};
}

nlohmann::json to_json(const BoundReport& report) {
  nlohmann::json row = nlohmann::json::object();
  row["formula_id"] = report.formula_id;
  for (const auto& [name, value] : report.inputs) row[name] = Number(value);
  row["value"] = Number(report.value);
  row["log_value"] = Number(report.log_value);
  row["vacuous"] = report.vacuous;
  row["flag"] = report.flag;
  return row;
}

}  // namespace csbm
