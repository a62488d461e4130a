// Copyright 2026 The selfdual Authors.
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

#include "selfdual/error.h"

namespace selfdual {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kWrongResidueClass: return "WrongResidueClass";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kStarViolated: return "StarViolated";
    case ErrorCode::kNotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorCode::kAlreadyMaximal: return "AlreadyMaximal";
    case ErrorCode::kZeroFunction: return "ZeroFunction";
    case ErrorCode::kNonRationalPlace: return "NonRationalPlace";
    case ErrorCode::kSupportOverlap: return "SupportOverlap";
    case ErrorCode::kNonRationalEvaluationPlace:
      return "NonRationalEvaluationPlace";
    case ErrorCode::kOmegaNotCertified: return "OmegaNotCertified";
    case ErrorCode::kInfinitePlaceInD: return "InfinitePlaceInD";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kRequiresOddR: return "RequiresOddR";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

}  // namespace selfdual
