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

#include "csbm/error.h"

#include <utility>

namespace csbm {

Error::Error(ErrorKind kind, std::string tag, const std::string& message)
    : std::runtime_error(message), kind_(kind), tag_(std::move(tag)) {}

void ThrowValidation(const std::string& tag, const std::string& message) {
  throw Error(ErrorKind::kValidation, tag, message);
}

void ThrowRuntime(const std::string& tag, const std::string& message) {
  throw Error(ErrorKind::kRuntime, tag, message);
}

}  // namespace csbm
