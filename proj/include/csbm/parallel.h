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

#ifndef CSBM_PARALLEL_H_
#define CSBM_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace csbm {

// Worker count from CSBM_THREADS, falling back to hardware concurrency.
int WorkerThreads();

// Runs body(i) for i in [0, count) on up to `threads` workers with a static
// contiguous split.
void ParallelFor(int64_t count, int threads,
                 const std::function<void(int64_t)>& body);

}  // namespace csbm

#endif  // CSBM_PARALLEL_H_
