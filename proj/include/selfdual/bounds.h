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

#ifndef SELFDUAL_BOUNDS_H_
#define SELFDUAL_BOUNDS_H_

#include <cstdint>
#include <vector>

#include "selfdual/rational.h"

namespace selfdual {

// q-ary entropy H_q(delta) with H_q(0) = 0. Throws kDomainError outside
// [0, 1 - 1/q].
double Entropy(std::uint64_t q, double delta);

// The unique delta0 in (0, 1 - 1/q) with H_q(delta0) = 1/2, i.e. where the
// Gilbert-Varshamov bound meets rate 1/2.
double GvDeltaAtHalf(std::uint64_t q);

// 1/2 - (1/(l^ceil(r/2) - 1) + 1/(l^floor(r/2) - 1))/2, the relative
// distance reachable by self-dual codes from towers over F_{l^r}.
// Throws kNotPrimePower, kRankTooSmall.
Rational TvzSelfDualDelta(std::uint64_t l, std::uint32_t r);

// 1/2 - gamma/m.
Rational TowerRateBound(std::int64_t m, const Rational& gamma);

// (1/(l^((r-1)/2) - 1) + 1/(l^((r+1)/2) - 1))/2 for odd r > 1.
// Throws kRequiresOddR.
Rational BbgsGamma(std::uint64_t l, std::uint32_t r);

// l^floor(r/2) > 3 + 2 ln(l^r). True implies the TVZ-type bound beats GV at
// rate 1/2; false is inconclusive.
bool SufficiencyCheck(std::uint64_t l, std::uint32_t r);

struct Factorization {
  std::uint64_t l = 0;
  std::uint32_t r = 0;
  Rational delta1;
};

struct BoundsReport {
  std::uint64_t q = 0;
  // Every (l, r) with q = l^r and r > 1, in increasing r.
  std::vector<Factorization> factorizations;
  double delta0 = 0.0;
  // Largest delta1 over the factorizations (0 when there are none).
  Rational best_delta1;
  bool beats_gv = false;
  // |delta0 - best_delta1| below the comparison guard band.
  bool borderline = false;
};

inline constexpr double kBorderlineBand = 1e-9;

// Throws kNotPrimePower.
BoundsReport BeatsGv(std::uint64_t q);

}  // namespace selfdual

#endif  // SELFDUAL_BOUNDS_H_
