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

#ifndef SELFDUAL_FINITE_FIELD_H_
#define SELFDUAL_FINITE_FIELD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace selfdual {

// A field element in canonical integer encoding: for coordinates c_i in the
// polynomial basis 1, x, ..., x^(m-1), the encoding is sum c_i * p^i. The
// encodings 0 and 1 are the additive and multiplicative identities.
using Elt = std::uint32_t;

bool IsPrime(std::uint64_t n);

// Returns (p, e) with n = p^e, or nullopt if n is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> PrimePowerDecompose(
    std::uint64_t n);

// F_q with q = p^m, represented as F_p[x]/(f) where f is the lexicographically
// smallest monic irreducible of degree m (coefficients compared from the
// constant term upward). Immutable and cheap to copy; copies share state.
class FiniteField {
 public:
  // Throws kNotPrime, kDegreeOutOfRange, or kDomainError when p^m does not
  // fit the 31-bit element encoding.
  static FiniteField Make(std::uint64_t p, std::uint32_t m);
  // Throws kNotPrimePower.
  static FiniteField OfOrder(std::uint64_t q);

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t m() const { return impl_->m; }
  std::uint32_t q() const { return impl_->q; }
  // Monic modulus, coefficients low-to-high (length m + 1).
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  bool Contains(std::uint64_t e) const { return e < impl_->q; }

  Elt Zero() const { return 0; }
  Elt One() const { return 1; }
  // Image of an integer under Z -> F_p -> F_q.
  Elt FromInt(std::int64_t v) const;

  Elt Add(Elt a, Elt b) const;
  Elt Sub(Elt a, Elt b) const;
  Elt Neg(Elt a) const;
  Elt Mul(Elt a, Elt b) const;
  Elt Inv(Elt a) const;  // kDivisionByZero for a == 0
  Elt Div(Elt a, Elt b) const;
  Elt Pow(Elt a, std::uint64_t e) const;
  Elt Frobenius(Elt a) const { return Pow(a, impl_->p); }

  std::vector<std::uint32_t> Coordinates(Elt a) const;
  Elt FromCoordinates(std::span<const std::uint32_t> coords) const;

  bool IsSquare(Elt a) const;
  // Smallest (by encoding) y with y^2 = a.
  std::optional<Elt> Sqrt(Elt a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.m() == b.m());
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    // Full operation tables, populated only for small q.
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<std::uint16_t> inv_table;
  };

  explicit FiniteField(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  Elt AddSlow(Elt a, Elt b) const;
  Elt MulSlow(Elt a, Elt b) const;

  std::shared_ptr<const Impl> impl_;
};

// alpha with alpha^2 = -1: 1 in characteristic 2, otherwise the smallest
// such alpha. Throws kNoSolution when q = 3 mod 4.
Elt SqrtOfMinusOne(const FiniteField& field);

// Lexicographically smallest (alpha, beta) with alpha^2 + beta^2 + 1 = 0.
// Only defined for q = 3 mod 4; throws kWrongResidueClass otherwise.
std::pair<Elt, Elt> SolveAlphaBeta(const FiniteField& field);

}  // namespace selfdual

#endif  // SELFDUAL_FINITE_FIELD_H_
