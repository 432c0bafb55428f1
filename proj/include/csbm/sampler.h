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

#ifndef CSBM_SAMPLER_H_
#define CSBM_SAMPLER_H_

#include <cstdint>

#include "csbm/graph.h"
#include "csbm/model.h"
#include "csbm/partition.h"

namespace csbm {

// One categorical draw per unordered pair {u, v}: color i with probability
// p_i (same side) or q_i (opposite sides), no edge otherwise. Each draw uses
// its own stream derived from (seed, u, v).
ColoredGraph sample_graph(const ModelParams& params, const Partition& partition,
                          uint64_t seed, int threads = 1);

}  // namespace csbm

#endif  // CSBM_SAMPLER_H_
