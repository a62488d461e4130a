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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "selfdual/ag_code.h"
#include "selfdual/bounds.h"
#include "selfdual/error.h"
#include "selfdual/finite_field.h"
#include "selfdual/function_field.h"
#include "selfdual/linear_code.h"
#include "selfdual/selfdual.h"
#include "test_support.h"

namespace selfdual {
namespace {

using testing::AllElements;
using testing::BruteForceMinDistance;
using testing::DivisorOver;
using testing::RandomCode;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<std::uint64_t> kGridQ = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25};
const std::vector<std::size_t> kGridN = {2, 4, 8, 12, 16};

std::string Case(std::uint64_t q, std::size_t n) {
  return "q=" + std::to_string(q) + " n=" + std::to_string(n);
}

Outcome BaseGrid() {
  Outcome o;
  int built = 0;
  int violated = 0;
  for (auto q : kGridQ) {
    const auto f = FiniteField::OfOrder(q);
    for (auto n : kGridN) {
      const bool star = CheckStar(q, n).satisfied;
      try {
        const auto code = BaseSelfDual(f, n);
        if (!star) o.Fail(Case(q, n) + " built despite star violation");
        if (code.length() != n || code.dimension() != n / 2 || !IsSelfDual(code)) {
          o.Fail(Case(q, n) + " not self-dual");
        }
        ++built;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kStarViolated || star) {
          o.Fail(Case(q, n) + " unexpected " + std::string(ErrorName(e.code())));
        }
        ++violated;
      }
    }
  }
  o.detail = o.pass ? std::to_string(built) + " self-dual, " +
                          std::to_string(violated) + " StarViolated"
                    : o.detail;
  return o;
}

Outcome EmbedGrid() {
  Outcome o;
  Rng rng(2024);
  int checked = 0;
  for (auto q : kGridQ) {
    const auto f = FiniteField::OfOrder(q);
    for (auto n : kGridN) {
      if (!CheckStar(q, n).satisfied) continue;
      for (int i = 0; i < 100; ++i) {
        const std::size_t k = UniformBelow(rng, n / 2 + 1);
        const auto c = RandomSelfOrthogonal(f, n, k, rng);
        const auto big = EmbedSelfDual(c);
        if (!big.Contains(c) || !IsSelfDual(big) || big.dimension() != n / 2 ||
            !(Dual(big) == big)) {
          o.Fail(Case(q, n) + " trial " + std::to_string(i));
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + "/" + std::to_string(checked) + " embedded";
  return o;
}

Outcome AgOracle() {
  Outcome o;
  Rng rng(31);
  const std::vector<std::uint64_t> qs = {4, 5, 7, 8, 9, 11, 13, 16};
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = FiniteField::OfOrder(qs[UniformBelow(rng, qs.size())]);
    const auto r = testing::MakeRandomAgSpec(f, rng);
    if (AgDual(r.spec) == Dual(ClCode(r.spec))) {
      ++agree;
    } else {
      o.Fail("spec " + std::to_string(i) + " over F_" + std::to_string(f.q()));
    }
  }
  if (o.pass) o.detail = std::to_string(agree) + "/100 agree";
  return o;
}

Outcome SelfDualAgCodes() {
  Outcome o;
  struct Expect {
    std::uint64_t q;
    std::size_t n, k, d;
  };
  for (const Expect& e : {Expect{4, 4, 2, 3}, Expect{8, 8, 4, 5}}) {
    const auto f = FiniteField::OfOrder(e.q);
    const Divisor d = DivisorOver(f, AllElements(f));
    const auto r = SelfDualAg(d, MakeOmegaFor(d));
    const auto dist = MinDistance(r.code);
    if (!IsSelfDual(r.code) || r.code.length() != e.n || r.code.dimension() != e.k ||
        dist != e.d || static_cast<std::int64_t>(dist) != r.designed_distance) {
      o.Fail("F_" + std::to_string(e.q) + " gave d=" + std::to_string(dist) +
             " designed " + std::to_string(r.designed_distance));
    }
  }
  // Further pipeline instances over subsets of rational places.
  Rng rng(41);
  int others = 0;
  for (std::uint64_t q : {5, 7, 9, 11, 13, 16}) {
    const auto f = FiniteField::OfOrder(q);
    for (int i = 0; i < 8; ++i) {
      auto roots = testing::RandomSupport(f, 2, rng);
      if (roots.size() % 2 == 1) roots.pop_back();
      if (!CheckStar(q, roots.size()).satisfied) continue;
      const Divisor d = DivisorOver(f, roots);
      const auto r = SelfDualAg(d, MakeOmegaFor(d));
      if (!IsSelfDual(r.code) ||
          static_cast<std::int64_t>(MinDistance(r.code)) < r.designed_distance) {
        o.Fail("F_" + std::to_string(q) + " support " + d.ToString());
      }
      ++others;
    }
  }
  if (o.pass) o.detail = "[4,2,3], [8,4,5] and " + std::to_string(others) + " more";
  return o;
}

Divisor RandomDivisor(const FiniteField& f, Rng& rng) {
  std::vector<Place> places;
  for (Elt a = 0; a < f.q(); ++a) places.push_back(Place::Rational(f, a));
  places.push_back(Place::Infinity(f));
  for (const auto& p : MonicPolynomials(f, 2)) {
    if (IsIrreducible(p)) places.push_back(Place::Finite(p));
  }
  Divisor d;
  const auto terms = 1 + UniformBelow(rng, 6);
  for (std::uint64_t i = 0; i < terms; ++i) {
    d.Add(places[UniformBelow(rng, places.size())],
          static_cast<std::int64_t>(UniformBelow(rng, 21)) - 10);
  }
  return d;
}

Outcome EvenDivisors() {
  Outcome o;
  Rng rng(51);
  const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 9};
  for (int i = 0; i < 500; ++i) {
    const auto f = FiniteField::OfOrder(qs[UniformBelow(rng, qs.size())]);
    const Divisor a = RandomDivisor(f, rng);
    const Divisor lo = a.FloorEven();
    const Divisor hi = a.CeilEven();
    if (!(2 * a == lo + hi) || !(lo <= a) || !(a <= hi) || !lo.IsEven() ||
        !hi.IsEven()) {
      o.Fail("divisor " + a.ToString());
    }
  }
  if (o.pass) o.detail = "500/500 divisors";
  return o;
}

Outcome Scan() {
  Outcome o;
  int prime_powers = 0;
  int beating = 0;
  double worst = 0;
  for (std::uint64_t q = 4; q <= 1024; ++q) {
    const auto pp = PrimePowerDecompose(q);
    if (!pp) continue;
    ++prime_powers;
    const auto report = BeatsGv(q);
    const bool expected = pp->second > 1 && q >= 64 && q != 125;
    if (report.beats_gv != expected) o.Fail("q=" + std::to_string(q));
    if (report.borderline) o.Fail("borderline at q=" + std::to_string(q));
    const double residual = std::abs(Entropy(q, report.delta0) - 0.5);
    worst = std::max(worst, residual);
    if (residual >= 1e-12) o.Fail("residual at q=" + std::to_string(q));
    beating += report.beats_gv;
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d prime powers, %d beat GV, max residual %.1e",
                  prime_powers, beating, worst);
    o.detail = buf;
  }
  return o;
}

Outcome Formulas() {
  Outcome o;
  if (TvzSelfDualDelta(2, 6) != Rational(5, 14)) o.Fail("tvz(2,6)");
  if (TowerRateBound(1, Rational(1, 7)) != TvzSelfDualDelta(2, 6)) o.Fail("tower(1,1/7)");
  const std::pair<std::uint64_t, std::uint32_t> odd[] = {{2, 3}, {2, 5}, {3, 3}, {5, 3}};
  for (const auto& [l, r] : odd) {
    if (TowerRateBound(1, BbgsGamma(l, r)) != TvzSelfDualDelta(l, r)) {
      o.Fail("odd case " + std::to_string(l) + "^" + std::to_string(r));
    }
  }
  for (std::int64_t l : {7, 8, 9}) {
    if (TvzSelfDualDelta(static_cast<std::uint64_t>(l), 2) !=
        Rational(1, 2) - Rational(1, l - 1)) {
      o.Fail("quadratic case l=" + std::to_string(l));
    }
  }
  if (o.pass) o.detail = "all exact identities hold";
  return o;
}

Outcome LinearAlgebra() {
  Outcome o;
  Rng rng(81);
  const std::vector<std::uint64_t> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
  int oracle = 0;
  for (int i = 0; i < 200; ++i) {
    const auto f = FiniteField::OfOrder(qs[UniformBelow(rng, qs.size())]);
    const std::size_t n = 1 + UniformBelow(rng, 12);
    const std::size_t rows = UniformBelow(rng, n + 2);
    const auto c = RandomCode(f, n, rows, rng);
    const auto dual = Dual(c);
    if (c.dimension() + dual.dimension() != n) o.Fail("dimension identity, code " + std::to_string(i));
    if (!(Dual(dual) == c)) o.Fail("involution, code " + std::to_string(i));
    double size = std::pow(static_cast<double>(f.q()), static_cast<double>(c.dimension()));
    if (c.dimension() > 0 && size <= 1024) {
      if (MinDistance(c) != BruteForceMinDistance(c)) o.Fail("min distance, code " + std::to_string(i));
      ++oracle;
    }
  }
  // Every (q, k) with q^k <= 2^10.
  for (auto q : qs) {
    const auto f = FiniteField::OfOrder(q);
    for (std::size_t k = 1; std::pow(static_cast<double>(q), static_cast<double>(k)) <= 1024; ++k) {
      for (std::size_t n = k; n <= k + 6; ++n) {
        const auto c = RandomCode(f, n, k, rng);
        if (c.dimension() == 0) continue;
        if (MinDistance(c) != BruteForceMinDistance(c)) {
          o.Fail("min distance q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
        ++oracle;
      }
    }
  }
  if (o.pass) o.detail = "200 codes, " + std::to_string(oracle) + " enumeration checks";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 when untimed
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace selfdual

int main() {
  using namespace selfdual;
  const Criterion criteria[] = {
      {1, "base self-dual grid", 5, BaseGrid},
      {2, "self-dual embedding", 60, EmbedGrid},
      {3, "AG dual oracle", 0, AgOracle},
      {4, "self-dual AG codes", 0, SelfDualAgCodes},
      {5, "even divisor calculus", 0, EvenDivisors},
      {6, "GV comparison scan", 10, Scan},
      {7, "bound formulas", 0, Formulas},
      {8, "linear algebra invariants", 0, LinearAlgebra},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.Fail("took " + std::to_string(secs) + " s");
    }
    failures += !o.pass;
    std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
