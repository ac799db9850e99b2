// Copyright 2026 The kip Authors
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

#include "kip/error.h"

namespace kip {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedSyntax:
      return "malformed-syntax";
    case ErrorCode::kSchemaViolation:
      return "schema-violation";
    case ErrorCode::kNegativeValue:
      return "negative-value";
    case ErrorCode::kNonpositiveDivisor:
      return "nonpositive-divisor";
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kCapacityProductTooLarge:
      return "capacity-product-too-large";
    case ErrorCode::kInstanceTooLarge:
      return "instance-too-large";
    case ErrorCode::kValueTooLarge:
      return "value-too-large";
    case ErrorCode::kNonpositiveEps:
      return "nonpositive-eps";
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kInternalInvariantViolation:
      return "internal-invariant-violation";
  }
  return "unknown";
}

}  // namespace kip
