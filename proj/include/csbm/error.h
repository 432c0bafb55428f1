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

#ifndef CSBM_ERROR_H_
#define CSBM_ERROR_H_

#include <stdexcept>
#include <string>

namespace csbm {

// Validation errors are caller mistakes (bad parameters, malformed files);
// runtime errors are resource or numeric limits hit by valid input.
enum class ErrorKind { kValidation, kRuntime };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string tag, const std::string& message);

  ErrorKind kind() const { return kind_; }
  // Stable machine-readable identifier, e.g. "odd_n" or "within_mass".
  const std::string& tag() const { return tag_; }

 private:
  ErrorKind kind_;
  std::string tag_;
};

[[noreturn]] void ThrowValidation(const std::string& tag,
                                  const std::string& message);
[[noreturn]] void ThrowRuntime(const std::string& tag,
                               const std::string& message);

}  // namespace csbm

#endif  // CSBM_ERROR_H_
