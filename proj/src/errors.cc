// Copyright 2026 The symnash Authors. All rights reserved.
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

#include "symnash/errors.h"

namespace symnash {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kMalformedProgram: return "MalformedProgram";
    case ErrorCode::kPrimaryNotOptimal: return "PrimaryNotOptimal";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kRankExceedsOne: return "RankExceedsOne";
    case ErrorCode::kFixedPointNotFound: return "FixedPointNotFound";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::kNotFullSupport: return "NotFullSupport";
    case ErrorCode::kNonPositiveMatrix: return "NonPositiveMatrix";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInternalInvariantViolation:
      return "InternalInvariantViolation";
  }
  return "Unknown";
}

}  // namespace symnash
