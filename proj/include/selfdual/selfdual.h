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

#ifndef SELFDUAL_SELFDUAL_H_
#define SELFDUAL_SELFDUAL_H_

#include <cstddef>
#include <cstdint>

#include "selfdual/finite_field.h"
#include "selfdual/linear_code.h"
#include "selfdual/random.h"

namespace selfdual {

// n is even and, when q = 3 mod 4, a multiple of 4. This holds exactly when a
// self-dual code of length n over F_q exists.
struct StarCondition {
  std::uint64_t q = 0;
  std::size_t n = 0;
  bool satisfied = false;
};

StarCondition CheckStar(std::uint64_t q, std::size_t n);

// Throws kNotPrimePower.
bool ExistsSelfDual(std::uint64_t q, std::size_t n);

// Explicit self-dual code of length n: blocks (alpha, 1) for q even or
// q = 1 mod 4, and pairs of rows built from (alpha, beta, 1, 0) and
// (-beta, alpha, 0, 1) for q = 3 mod 4. Throws kStarViolated.
LinearCode BaseSelfDual(const FiniteField& field, std::size_t n);

// A vector x in C^perp \ C with <x, x> = 0. Requires C self-orthogonal with
// dim C < n/2 and the star condition. Throws kAlreadyMaximal,
// kNotSelfOrthogonal, kStarViolated.
Vector IsotropicInComplement(const LinearCode& code);

// Self-dual code containing `code`, built by adding one isotropic vector of
// the current dual at a time. Throws kNotSelfOrthogonal, kStarViolated.
LinearCode EmbedSelfDual(const LinearCode& code);

// Random k-dimensional subcode of BaseSelfDual(field, n) after a random
// coordinate permutation and random sign changes (both isometries of the
// standard form). Requires 2k <= n and the star condition.
LinearCode RandomSelfOrthogonal(const FiniteField& field, std::size_t n,
                                std::size_t k, Rng& rng);

}  // namespace selfdual

#endif  // SELFDUAL_SELFDUAL_H_
