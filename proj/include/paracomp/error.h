// Copyright 2026 The paracomp Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paracomp {

enum class ErrorKind {
  kParse,
  kDuplicateCell,
  kMissingCell,
  kUnknownValue,
  kNegativeWeight,
  kEmptySupport,
  kSchemaMismatch,
  kInvalidArgument,
  kIdentitySpec,
  kNotABijection,
  kDegenerateParadigm,
  kDeadForm,
  kUnknownToken,
  kNonFiniteLoss,
  kAllRunsDiverged,
  kBaseMismatch,
  kDegenerateSample,
  kZeroVariance,
  kMissingBaseline,
  kConfigMismatch,
};

std::string_view error_kind_name(ErrorKind kind);

// All library failures surface as this exception; `kind()` identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace paracomp
