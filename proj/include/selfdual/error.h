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

#ifndef SELFDUAL_ERROR_H_
#define SELFDUAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfdual {

// Domain error codes. The CLI reports these by name and exits with status 1.
enum class ErrorCode {
  kNotPrime,
  kNotPrimePower,
  kDegreeOutOfRange,
  kDivisionByZero,
  kNoSolution,
  kWrongResidueClass,
  kInconsistent,
  kLengthMismatch,
  kBudgetExceeded,
  kZeroCode,
  kStarViolated,
  kNotSelfOrthogonal,
  kAlreadyMaximal,
  kZeroFunction,
  kNonRationalPlace,
  kSupportOverlap,
  kNonRationalEvaluationPlace,
  kOmegaNotCertified,
  kInfinitePlaceInD,
  kDomainError,
  kRankTooSmall,
  kRequiresOddR,
  kParseError,
  kFieldMismatch,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace selfdual

#endif  // SELFDUAL_ERROR_H_
