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

#include "selfdual/finite_field.h"

#include <set>

#include "gtest/gtest.h"
#include "selfdual/error.h"
#include "test_support.h"

namespace selfdual {
namespace {

using testing::RandomElt;

std::vector<FiniteField> SampleFields() {
  std::vector<FiniteField> out;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121, 256, 343,
                          729, 1024}) {
    out.push_back(FiniteField::OfOrder(q));
  }
  return out;
}

TEST(FiniteField, F4ModulusIsOnlyIrreducibleQuadratic) {
  // Monic quadratics over F_2 are x^2 + c1 x + c0; irreducible iff no root.
  std::vector<std::vector<std::uint32_t>> irreducible;
  for (std::uint32_t c0 = 0; c0 < 2; ++c0) {
    for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < 2; ++x) {
        if ((x * x + c1 * x + c0) % 2 == 0) has_root = true;
      }
      if (!has_root) irreducible.push_back({c0, c1, 1});
    }
  }
  ASSERT_EQ(irreducible.size(), 1u);
  EXPECT_EQ(FiniteField::Make(2, 2).modulus(), irreducible.front());
}

TEST(FiniteField, ModulusIsSmallestIrreducibleLowDegreeFirst) {
  // Over F_2, x^3 + 1 has root 1; x^3 + x^2 + 1 is the first cubic without a
  // root when (c0, c1, c2) is read lexicographically.
  EXPECT_EQ(FiniteField::Make(2, 3).modulus(),
            (std::vector<std::uint32_t>{1, 0, 1, 1}));
  // Over F_3: x^2 + 1 has no root (-1 is a non-square mod 3).
  EXPECT_EQ(FiniteField::Make(3, 2).modulus(),
            (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, PrimeFieldArithmetic) {
  const auto f5 = FiniteField::Make(5, 1);
  EXPECT_EQ(f5.q(), 5u);
  EXPECT_EQ(f5.Inv(2), 3u);
  EXPECT_EQ(f5.Mul(3, 4), 2u);
  EXPECT_EQ(f5.Sub(1, 3), 3u);
  EXPECT_EQ(f5.Neg(0), 0u);
}

TEST(FiniteField, F4Multiplication) {
  const auto f4 = FiniteField::Make(2, 2);
  const Elt w = 2;  // the class of x
  EXPECT_EQ(f4.Mul(w, w), f4.Add(w, 1));
  EXPECT_EQ(f4.Mul(w, w), 3u);
}

TEST(FiniteField, Errors) {
  try {
    FiniteField::Make(6, 1);
    FAIL() << "expected NotPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
  }
  try {
    FiniteField::Make(5, 0);
    FAIL() << "expected DegreeOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeOutOfRange);
  }
  try {
    FiniteField::OfOrder(12);
    FAIL() << "expected NotPrimePower";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPrimePower);
  }
  const auto f9 = FiniteField::OfOrder(9);
  try {
    f9.Inv(0);
    FAIL() << "expected DivisionByZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
  EXPECT_THROW(f9.Div(1, 0), Error);
}

TEST(FiniteField, FieldAxiomsOnRandomTriples) {
  Rng rng(11);
  for (const auto& f : SampleFields()) {
    for (int i = 0; i < 1000; ++i) {
      const Elt a = RandomElt(f, rng);
      const Elt b = RandomElt(f, rng);
      const Elt c = RandomElt(f, rng);
      ASSERT_EQ(f.Add(f.Add(a, b), c), f.Add(a, f.Add(b, c)));
      ASSERT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)));
      ASSERT_EQ(f.Mul(f.Mul(a, b), c), f.Mul(a, f.Mul(b, c)));
      ASSERT_EQ(f.Add(a, 0), a);
      ASSERT_EQ(f.Add(a, f.Neg(a)), 0u);
      if (a != 0) ASSERT_EQ(f.Mul(a, f.Inv(a)), 1u) << "q=" << f.q();
    }
  }
}

TEST(FiniteField, MultiplicationByNonzeroIsPermutation) {
  Rng rng(12);
  for (const auto& f : SampleFields()) {
    const Elt g = 1 + static_cast<Elt>(UniformBelow(rng, f.q() - 1));
    std::set<Elt> image;
    for (Elt x = 0; x < f.q(); ++x) image.insert(f.Mul(g, x));
    EXPECT_EQ(image.size(), f.q());
    EXPECT_EQ(*image.rbegin(), f.q() - 1);
  }
}

TEST(FiniteField, FrobeniusIsAdditive) {
  Rng rng(13);
  for (const auto& f : SampleFields()) {
    for (int i = 0; i < 1000; ++i) {
      const Elt a = RandomElt(f, rng);
      const Elt b = RandomElt(f, rng);
      ASSERT_EQ(f.Frobenius(f.Add(a, b)),
                f.Add(f.Frobenius(a), f.Frobenius(b)));
    }
  }
}

TEST(FiniteField, CoordinatesRoundTrip) {
  const auto f = FiniteField::OfOrder(27);
  for (Elt a = 0; a < f.q(); ++a) {
    EXPECT_EQ(f.FromCoordinates(f.Coordinates(a)), a);
  }
}

TEST(FiniteField, LargeFieldWithoutTables) {
  const auto f = FiniteField::OfOrder(3125);  // 5^5
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Elt a = 1 + static_cast<Elt>(UniformBelow(rng, f.q() - 1));
    ASSERT_EQ(f.Mul(a, f.Inv(a)), 1u);
    ASSERT_EQ(f.Pow(a, f.q() - 1), 1u);
  }
}

// Smallest x in [0, p) with x^2 = -1 mod p, by integer search.
std::optional<std::uint32_t> IntegerSqrtMinusOne(std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    if ((x * x + 1) % p == 0) return x;
  }
  return std::nullopt;
}

TEST(SqrtOfMinusOne, MatchesIntegerSearch) {
  EXPECT_EQ(IntegerSqrtMinusOne(5), 2u);
  EXPECT_EQ(IntegerSqrtMinusOne(13), 5u);
  EXPECT_EQ(SqrtOfMinusOne(FiniteField::OfOrder(5)), 2u);
  EXPECT_EQ(SqrtOfMinusOne(FiniteField::OfOrder(13)), 5u);
  for (std::uint32_t p : {17u, 29u, 37u, 41u}) {
    EXPECT_EQ(SqrtOfMinusOne(FiniteField::OfOrder(p)), *IntegerSqrtMinusOne(p));
  }
}

TEST(SqrtOfMinusOne, CharacteristicTwoIsOne) {
  for (std::uint64_t q : {2, 4, 8, 16}) {
    EXPECT_EQ(SqrtOfMinusOne(FiniteField::OfOrder(q)), 1u);
  }
}

TEST(SqrtOfMinusOne, PropertyAndFailure) {
  for (std::uint64_t q : {9, 25, 49, 81, 121}) {
    const auto f = FiniteField::OfOrder(q);
    const Elt a = SqrtOfMinusOne(f);
    EXPECT_EQ(f.Add(f.Mul(a, a), 1), 0u) << "q=" << q;
  }
  try {
    SqrtOfMinusOne(FiniteField::OfOrder(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSolution);
  }
}

TEST(SolveAlphaBeta, MatchesIntegerSearch) {
  auto first_pair = [](std::uint32_t p) {
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        if ((a * a + b * b + 1) % p == 0) return std::make_pair(a, b);
      }
    }
    return std::make_pair(p, p);
  };
  EXPECT_EQ(first_pair(3), std::make_pair(1u, 1u));
  EXPECT_EQ(first_pair(7), std::make_pair(2u, 3u));
  EXPECT_EQ(first_pair(11), std::make_pair(1u, 3u));
  for (std::uint32_t p : {3u, 7u, 11u, 19u, 23u, 31u}) {
    const auto [a, b] = SolveAlphaBeta(FiniteField::OfOrder(p));
    EXPECT_EQ(std::make_pair(a, b), first_pair(p)) << "p=" << p;
  }
}

TEST(SolveAlphaBeta, ExtensionFieldsAndErrors) {
  const auto f27 = FiniteField::OfOrder(27);
  const auto [a, b] = SolveAlphaBeta(f27);
  EXPECT_EQ(f27.Add(f27.Add(f27.Mul(a, a), f27.Mul(b, b)), 1), 0u);
  for (std::uint64_t q : {4, 5, 9, 13}) {
    try {
      SolveAlphaBeta(FiniteField::OfOrder(q));
      FAIL() << "q=" << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kWrongResidueClass);
    }
  }
}

}  // namespace
}  // namespace selfdual
