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

#include "paracomp/error.h"

namespace paracomp {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDuplicateCell: return "DuplicateCell";
    case ErrorKind::kMissingCell: return "MissingCell";
    case ErrorKind::kUnknownValue: return "UnknownValue";
    case ErrorKind::kNegativeWeight: return "NegativeWeight";
    case ErrorKind::kEmptySupport: return "EmptySupport";
    case ErrorKind::kSchemaMismatch: return "SchemaMismatch";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIdentitySpec: return "IdentitySpec";
    case ErrorKind::kNotABijection: return "NotABijection";
    case ErrorKind::kDegenerateParadigm: return "DegenerateParadigm";
    case ErrorKind::kDeadForm: return "DeadForm";
    case ErrorKind::kUnknownToken: return "UnknownToken";
    case ErrorKind::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorKind::kAllRunsDiverged: return "AllRunsDiverged";
    case ErrorKind::kBaseMismatch: return "BaseMismatch";
    case ErrorKind::kDegenerateSample: return "DegenerateSample";
    case ErrorKind::kZeroVariance: return "ZeroVariance";
    case ErrorKind::kMissingBaseline: return "MissingBaseline";
    case ErrorKind::kConfigMismatch: return "ConfigMismatch";
  }
  return "Error";
}

}  // namespace paracomp
