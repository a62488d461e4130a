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

#include "selfdual/ag_code.h"

#include <functional>

#include "gtest/gtest.h"
#include "selfdual/error.h"
#include "selfdual/linear_code.h"
#include "selfdual/selfdual.h"
#include "test_support.h"

namespace selfdual {
namespace {

using testing::AllElements;
using testing::DivisorOver;
using testing::MakeRandomAgSpec;
using testing::PolynomialEvaluationCode;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kDomainError;
}

TEST(ClCode, FourElementExample) {
  const auto f4 = FiniteField::OfOrder(4);
  const Divisor d = DivisorOver(f4, AllElements(f4));
  const auto inf = Place::Infinity(f4);
  const auto code = ClCode({f4, d, Divisor::Of(inf), std::nullopt});
  EXPECT_EQ(code, LinearCode::FromRows(f4, 4, {{1, 1, 1, 1}, {0, 1, 2, 3}}));

  const auto rep = ClCode({f4, d, Divisor(), std::nullopt});
  EXPECT_EQ(rep, LinearCode::FromRows(f4, 4, {{1, 1, 1, 1}}));
}

TEST(ClCode, Errors) {
  const auto f5 = FiniteField::OfOrder(5);
  const Divisor d = DivisorOver(f5, {0, 1, 2});
  EXPECT_EQ(CodeOf([&] {
              ClCode({f5, d, Divisor::Of(Place::Rational(f5, 1)), std::nullopt});
            }),
            ErrorCode::kSupportOverlap);
  const Divisor quad = Divisor::Of(Place::Finite(Polynomial(f5, {2, 0, 1})));
  EXPECT_EQ(CodeOf([&] { ClCode({f5, quad, Divisor(), std::nullopt}); }),
            ErrorCode::kNonRationalEvaluationPlace);
  EXPECT_EQ(CodeOf([&] {
              ClCode({f5, Divisor::Of(Place::Rational(f5, 0), 2), Divisor(),
                      std::nullopt});
            }),
            ErrorCode::kDomainError);
}

TEST(ClCode, MatchesPolynomialEvaluation) {
  Rng rng(61);
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const auto f = FiniteField::OfOrder(q);
    for (int i = 0; i < 10; ++i) {
      const auto r = MakeRandomAgSpec(f, rng);
      const auto k = r.spec.g.Coeff(Place::Infinity(f));
      EXPECT_EQ(ClCode(r.spec), PolynomialEvaluationCode(f, r.roots, k));
    }
  }
}

TEST(MakeOmega, Examples) {
  for (std::uint64_t q : {4, 5, 7, 8, 9}) {
    const auto f = FiniteField::OfOrder(q);
    const Divisor d = DivisorOver(f, AllElements(f));
    const Differential omega = MakeOmegaFor(d);
    EXPECT_EQ(DifferentialDivisor(omega),
              Divisor::Of(Place::Infinity(f), static_cast<std::int64_t>(q) - 2) - d);
    EXPECT_TRUE(IsCertified(d, omega));
  }

  const auto f7 = FiniteField::OfOrder(7);
  const auto p0 = Place::Rational(f7, 0);
  const Differential at_zero = MakeOmegaFor(Divisor::Of(p0));
  EXPECT_EQ(at_zero.f, RationalFunction(Polynomial::Constant(f7, 1),
                                        Polynomial::Monomial(f7, 1)));
  EXPECT_EQ(Residue(at_zero, p0), 1u);

  const Differential at_one = MakeOmegaFor(Divisor::Of(Place::Rational(f7, 1)));
  EXPECT_EQ(at_one.f, RationalFunction(Polynomial::Constant(f7, 1),
                                       Polynomial::Linear(f7, 1)));

  EXPECT_EQ(CodeOf([&] { MakeOmegaFor(Divisor::Of(Place::Infinity(f7))); }),
            ErrorCode::kInfinitePlaceInD);
}

TEST(IsCertified, RejectsWrongDifferentials) {
  const auto f5 = FiniteField::OfOrder(5);
  const Divisor d = DivisorOver(f5, {1, 2});
  const Differential dz{RationalFunction(Polynomial::Constant(f5, 1))};
  EXPECT_FALSE(IsCertified(d, dz));
  // Residues 1 at P_1 and -1 at P_2.
  const Differential mixed{RationalFunction(
      Polynomial::Constant(f5, 1),
      Polynomial::Linear(f5, 1) * Polynomial::Linear(f5, 2))};
  EXPECT_FALSE(IsCertified(d, mixed));
  EXPECT_TRUE(IsCertified(d, MakeOmegaFor(d)));
}

TEST(AgDual, Examples) {
  const auto f4 = FiniteField::OfOrder(4);
  const Divisor d = DivisorOver(f4, AllElements(f4));
  const auto inf = Place::Infinity(f4);
  const AGCodeSpec spec{f4, d, Divisor::Of(inf), MakeOmegaFor(d)};
  EXPECT_EQ(AgDual(spec), ClCode(spec));
  EXPECT_TRUE(IsSelfDual(ClCode(spec)));

  const auto f7 = FiniteField::OfOrder(7);
  const Divisor d7 = DivisorOver(f7, {0, 1, 3, 5, 6});
  const AGCodeSpec zero{f7, d7, Divisor(), MakeOmegaFor(d7)};
  const auto dual = AgDual(zero);
  EXPECT_EQ(dual.dimension(), 4u);
  EXPECT_EQ(dual, Dual(ClCode(zero)));

  const AGCodeSpec bare{f7, d7, Divisor(), std::nullopt};
  EXPECT_EQ(CodeOf([&] { AgDual(bare); }), ErrorCode::kOmegaNotCertified);
  const AGCodeSpec wrong{f7, d7, Divisor(),
                         Differential{RationalFunction(Polynomial::Constant(f7, 1))}};
  EXPECT_EQ(CodeOf([&] { AgDual(wrong); }), ErrorCode::kOmegaNotCertified);
}

TEST(AgDual, MatchesKernelDual) {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t qs[] = {4, 5, 7, 8, 9, 11, 13, 16};
    const auto f = FiniteField::OfOrder(qs[UniformBelow(rng, 8)]);
    const auto r = MakeRandomAgSpec(f, rng);
    ASSERT_EQ(AgDual(r.spec), Dual(ClCode(r.spec))) << "q=" << f.q() << " i=" << i;
  }
}

TEST(AgDual, SelfOrthogonalityCorollaries) {
  Rng rng(63);
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
    const auto f = FiniteField::OfOrder(q);
    for (int i = 0; i < 15; ++i) {
      const auto r = MakeRandomAgSpec(f, rng);
      const Divisor twice = r.spec.d + DifferentialDivisor(*r.spec.omega);
      const Divisor g = twice.FloorEven().Half();
      const AGCodeSpec spec{f, r.spec.d, g, r.spec.omega};
      const auto code = ClCode(spec);
      EXPECT_TRUE(IsSelfOrthogonal(code));
      if (twice.IsEven()) EXPECT_TRUE(IsSelfDual(code));
    }
  }
}

TEST(ClCode, DesignedDistance) {
  Rng rng(64);
  for (std::uint64_t q : {4, 5, 7, 8}) {
    const auto f = FiniteField::OfOrder(q);
    for (int i = 0; i < 10; ++i) {
      const auto r = MakeRandomAgSpec(f, rng);
      const auto code = ClCode(r.spec);
      const auto n = static_cast<std::int64_t>(r.roots.size());
      EXPECT_GE(static_cast<std::int64_t>(MinDistance(code)), n - r.spec.g.Degree());
    }
  }
}

TEST(SelfDualAg, MdsExamples) {
  const auto f4 = FiniteField::OfOrder(4);
  const Divisor d4 = DivisorOver(f4, AllElements(f4));
  const auto r4 = SelfDualAg(d4, MakeOmegaFor(d4));
  EXPECT_FALSE(r4.extended);
  EXPECT_EQ(r4.g, Divisor::Of(Place::Infinity(f4)));
  EXPECT_EQ(r4.designed_distance, 3);
  EXPECT_TRUE(IsSelfDual(r4.code));
  EXPECT_EQ(r4.code.dimension(), 2u);
  EXPECT_EQ(MinDistance(r4.code), 3u);

  const auto f8 = FiniteField::OfOrder(8);
  const Divisor d8 = DivisorOver(f8, AllElements(f8));
  const auto r8 = SelfDualAg(d8, MakeOmegaFor(d8));
  EXPECT_EQ(r8.designed_distance, 5);
  EXPECT_TRUE(IsSelfDual(r8.code));
  EXPECT_EQ(r8.code.dimension(), 4u);
  EXPECT_EQ(MinDistance(r8.code), 5u);
}

TEST(SelfDualAg, NineElementField) {
  const auto f9 = FiniteField::OfOrder(9);
  const Divisor all = DivisorOver(f9, AllElements(f9));
  EXPECT_EQ(CodeOf([&] { SelfDualAg(all, MakeOmegaFor(all)); }),
            ErrorCode::kStarViolated);

  std::vector<Elt> nonzero(8);
  for (Elt a = 1; a < 9; ++a) nonzero[a - 1] = a;
  const Divisor d = DivisorOver(f9, nonzero);
  const auto r = SelfDualAg(d, MakeOmegaFor(d));
  EXPECT_TRUE(IsSelfDual(r.code));
  EXPECT_TRUE(r.code.Contains(r.base));
  EXPECT_GE(static_cast<std::int64_t>(MinDistance(r.code)), r.designed_distance);
}

TEST(SelfDualAg, RandomSupportsMeetDesignedDistance) {
  Rng rng(65);
  int built = 0;
  for (std::uint64_t q : {4, 5, 8, 9, 13}) {
    const auto f = FiniteField::OfOrder(q);
    for (int i = 0; i < 12; ++i) {
      auto roots = testing::RandomSupport(f, 2, rng);
      if (roots.size() % 2 == 1) roots.pop_back();
      const Divisor d = DivisorOver(f, roots);
      if (!CheckStar(f.q(), roots.size()).satisfied) continue;
      const auto r = SelfDualAg(d, MakeOmegaFor(d));
      ++built;
      EXPECT_TRUE(IsSelfDual(r.code));
      EXPECT_TRUE(r.code.Contains(r.base));
      EXPECT_GE(static_cast<std::int64_t>(MinDistance(r.code)), r.designed_distance);
    }
  }
  EXPECT_GT(built, 20);
}

}  // namespace
}  // namespace selfdual
