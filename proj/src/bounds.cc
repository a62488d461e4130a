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

#include "selfdual/bounds.h"

#include <cmath>
#include <string>

#include "selfdual/error.h"
#include "selfdual/finite_field.h"

namespace selfdual {
namespace {

std::int64_t IntPow(std::uint64_t base, std::uint32_t e) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= static_cast<std::int64_t>(base);
  return r;
}

void RequirePrimePower(std::uint64_t q) {
  if (!PrimePowerDecompose(q)) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
}

}  // namespace

double Entropy(std::uint64_t q, double delta) {
  const double qd = static_cast<double>(q);
  const double upper = 1.0 - 1.0 / qd;
  if (q < 2 || !(delta >= 0.0) || delta > upper + 1e-15) {
    throw Error(ErrorCode::kDomainError,
                "entropy argument outside [0, 1 - 1/q]");
  }
  if (delta == 0.0) return 0.0;
  const double ln_q = std::log(qd);
  return (delta * std::log(qd - 1.0) - delta * std::log(delta) -
          (1.0 - delta) * std::log1p(-delta)) /
         ln_q;
}

double GvDeltaAtHalf(std::uint64_t q) {
  double lo = 0.0;
  double hi = 1.0 - 1.0 / static_cast<double>(q);
  // H_q is strictly increasing on the bracket, H_q(lo) < 1/2 < H_q(hi).
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double h = Entropy(q, mid);
    if (h == 0.5) return mid;
    (h < 0.5 ? lo : hi) = mid;
  }
  const double rlo = std::abs(Entropy(q, lo) - 0.5);
  const double rhi = std::abs(Entropy(q, hi) - 0.5);
  return rlo <= rhi ? lo : hi;
}

Rational TvzSelfDualDelta(std::uint64_t l, std::uint32_t r) {
  RequirePrimePower(l);
  if (r < 2) {
    throw Error(ErrorCode::kRankTooSmall, "need q = l^r with r >= 2");
  }
  const std::int64_t ceil_term = IntPow(l, (r + 1) / 2) - 1;
  const std::int64_t floor_term = IntPow(l, r / 2) - 1;
  return Rational(1, 2) -
         Rational(1, 2) * (Rational(1, ceil_term) + Rational(1, floor_term));
}

Rational TowerRateBound(std::int64_t m, const Rational& gamma) {
  if (m < 1) throw Error(ErrorCode::kDomainError, "m must be at least 1");
  return Rational(1, 2) - gamma / m;
}

Rational BbgsGamma(std::uint64_t l, std::uint32_t r) {
  if (r < 3 || r % 2 == 0) {
    throw Error(ErrorCode::kRequiresOddR, "r must be odd and greater than 1");
  }
  return Rational(1, 2) * (Rational(1, IntPow(l, (r - 1) / 2) - 1) +
                           Rational(1, IntPow(l, (r + 1) / 2) - 1));
}

bool SufficiencyCheck(std::uint64_t l, std::uint32_t r) {
  const double lhs = static_cast<double>(IntPow(l, r / 2));
  const double rhs =
      3.0 + 2.0 * static_cast<double>(r) * std::log(static_cast<double>(l));
  return lhs > rhs;
}

BoundsReport BeatsGv(std::uint64_t q) {
  const auto pe = PrimePowerDecompose(q);
  if (!pe) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  const auto [p, e] = *pe;
  BoundsReport report;
  report.q = q;
  report.delta0 = GvDeltaAtHalf(q);
  for (std::uint32_t r = 2; r <= e; ++r) {
    if (e % r != 0) continue;
    const std::uint64_t l = static_cast<std::uint64_t>(IntPow(p, e / r));
    const Rational d1 = TvzSelfDualDelta(l, r);
    report.factorizations.push_back({l, r, d1});
    if (report.factorizations.size() == 1 || d1 > report.best_delta1) {
      report.best_delta1 = d1;
    }
  }
  if (!report.factorizations.empty()) {
    const double best = boost::rational_cast<double>(report.best_delta1);
    report.beats_gv = report.delta0 < best;
    report.borderline = std::abs(report.delta0 - best) < kBorderlineBand;
  }
  return report;
}

}  // namespace selfdual
