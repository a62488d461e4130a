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

#ifndef SELFDUAL_FUNCTION_FIELD_H_
#define SELFDUAL_FUNCTION_FIELD_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfdual/finite_field.h"
#include "selfdual/polynomial.h"

namespace selfdual {

// A place of the rational function field F_q(z): a monic irreducible
// polynomial, or the place at infinity.
class Place {
 public:
  // Throws kDomainError unless `poly` is monic and irreducible.
  static Place Finite(const Polynomial& poly);
  // The place z - alpha.
  static Place Rational(const FiniteField& field, Elt alpha);
  static Place Infinity(const FiniteField& field);

  const FiniteField& field() const { return poly_.field(); }
  bool IsInfinite() const { return infinite_; }
  int Degree() const { return infinite_ ? 1 : poly_.degree(); }
  bool IsRational() const { return Degree() == 1; }
  // Only meaningful for finite places.
  const Polynomial& Poly() const { return poly_; }
  // alpha for the finite rational place z - alpha.
  Elt Root() const;

  std::string ToString() const;

  // Finite places by degree, rational ones by root, higher-degree ones by
  // coefficients from the constant term up; infinity last.
  friend bool operator<(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && a.poly_ == b.poly_;
  }

 private:
  Place(Polynomial poly, bool infinite)
      : poly_(std::move(poly)), infinite_(infinite) {}

  Polynomial poly_;
  bool infinite_;
};

// Finite formal sum of places with nonzero integer coefficients. Iteration
// follows the place order.
class Divisor {
 public:
  using Map = std::map<Place, std::int64_t>;

  Divisor() = default;
  static Divisor Of(const Place& place, std::int64_t coeff = 1);

  std::int64_t Coeff(const Place& place) const;
  void Add(const Place& place, std::int64_t coeff);
  const Map& terms() const { return terms_; }

  std::int64_t Degree() const;
  std::vector<Place> Support() const;
  bool IsZero() const { return terms_.empty(); }
  bool IsEven() const;
  bool IsEffective() const;

  // Largest even divisor <= A and smallest even divisor >= A.
  Divisor FloorEven() const;
  Divisor CeilEven() const;
  // A/2 for even A; throws kDomainError otherwise.
  Divisor Half() const;

  std::string ToString() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend Divisor operator*(std::int64_t c, const Divisor& a);
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.terms_ == b.terms_;
  }
  // Partial order: A <= B iff B - A is effective.
  friend bool operator<=(const Divisor& a, const Divisor& b) {
    return (b - a).IsEffective();
  }

 private:
  Map terms_;
};

// num/den in lowest terms with monic denominator.
class RationalFunction {
 public:
  // Throws kDivisionByZero for den = 0.
  RationalFunction(const Polynomial& num, const Polynomial& den);
  explicit RationalFunction(const Polynomial& poly);

  const FiniteField& field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool IsZero() const { return num_.IsZero(); }

  // Value at a rational place where the function has no pole. Throws
  // kNonRationalPlace, or kDomainError at a pole.
  Elt ValueAt(const Place& place) const;

  std::string ToString() const;

  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

// The differential f dz.
struct Differential {
  RationalFunction f;
};

// Throws kZeroFunction.
std::int64_t Valuation(const RationalFunction& f, const Place& place);
Divisor PrincipalDivisor(const RationalFunction& f);

std::int64_t Valuation(const Differential& omega, const Place& place);
// (f dz) = (f) - 2 P_inf.
Divisor DifferentialDivisor(const Differential& omega);

// Residue at a rational place. Throws kNonRationalPlace.
Elt Residue(const Differential& omega, const Place& place);

// Basis of L(A) = {f : (f) + A >= 0} u {0}; empty when deg A < 0.
std::vector<RationalFunction> RiemannRochBasis(const FiniteField& field,
                                               const Divisor& a);

}  // namespace selfdual

#endif  // SELFDUAL_FUNCTION_FIELD_H_
