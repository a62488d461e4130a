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

#ifndef SELFDUAL_AG_CODE_H_
#define SELFDUAL_AG_CODE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "selfdual/finite_field.h"
#include "selfdual/function_field.h"
#include "selfdual/linear_code.h"

namespace selfdual {

// Evaluation code C_L(G, D) on F_q(z). D is a sum of distinct rational places
// (coefficient 1 each); its place order is the evaluation order.
struct AGCodeSpec {
  FiniteField field;
  Divisor d;
  Divisor g;
  std::optional<Differential> omega;
};

// v_P(omega) = -1 and all residues res_P(omega) equal, for every P in supp D.
bool IsCertified(const Divisor& d, const Differential& omega);

// Evaluations of a Riemann-Roch basis of G at the places of D. Throws
// kSupportOverlap, kNonRationalEvaluationPlace, or kDomainError when D is
// not a sum of distinct places.
LinearCode ClCode(const AGCodeSpec& spec);

// C_L(D + (omega) - G, D), the dual of C_L(G, D) for certified omega.
// Throws kOmegaNotCertified.
LinearCode AgDual(const AGCodeSpec& spec);

// omega = du/u with u = prod_{P_alpha in D} (z - alpha). Throws
// kInfinitePlaceInD, and kOmegaNotCertified if the check fails.
Differential MakeOmegaFor(const Divisor& d);

struct SelfDualAgResult {
  LinearCode code;
  // deg(floor(D + (omega)))/2 - deg(omega)
  std::int64_t designed_distance = 0;
  // G = floor(D + (omega))/2 and the self-orthogonal C_L(G, D).
  Divisor g;
  LinearCode base;
  // False when D + (omega) is even and C_L(G, D) is already self-dual.
  bool extended = false;
};

// Self-dual code from the self-orthogonal C_L(G, D), G = floor(D + (omega))/2,
// extended to a self-dual code when needed. Throws kStarViolated,
// kOmegaNotCertified.
SelfDualAgResult SelfDualAg(const Divisor& d, const Differential& omega);

}  // namespace selfdual

#endif  // SELFDUAL_AG_CODE_H_
