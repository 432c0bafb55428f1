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

#ifndef CSBM_JSON_IO_H_
#define CSBM_JSON_IO_H_

#include "csbm/bounds.h"
#include "csbm/decoder.h"
#include "csbm/ldp.h"
#include "csbm/model.h"
#include "json.hpp"

namespace csbm {

// {"n": ..., "alphas": [...], "betas": [...]}
nlohmann::json params_to_json(const ModelParams& params);
// Missing or mistyped fields raise ValidationError "params_json".
ModelParams params_from_json(const nlohmann::json& j);

// {"labels": "AABB...", "score": ..., "tie": ..., "explored": ...}
nlohmann::json to_json(const DecodeResult& result);
nlohmann::json to_json(const DivergenceReport& report);
nlohmann::json to_json(const RateResult& result);
// Flat row: formula_id, every input by name, value, log_value, vacuous and
// flag. Infinite values serialize as null.
nlohmann::json to_json(const BoundReport& report);

}  // namespace csbm

#endif  // CSBM_JSON_IO_H_
