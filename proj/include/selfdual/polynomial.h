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

#ifndef SELFDUAL_POLYNOMIAL_H_
#define SELFDUAL_POLYNOMIAL_H_

#include <string>
#include <utility>
#include <vector>

#include "selfdual/finite_field.h"

namespace selfdual {

// Univariate polynomial over F_q, coefficients low-to-high with no trailing
// zeros (the zero polynomial has no coefficients and degree -1).
class Polynomial {
 public:
  explicit Polynomial(FiniteField field, std::vector<Elt> coeffs = {});

  static Polynomial Constant(const FiniteField& field, Elt c);
  // z^k
  static Polynomial Monomial(const FiniteField& field, int k);
  // z - alpha
  static Polynomial Linear(const FiniteField& field, Elt alpha);

  const FiniteField& field() const { return field_; }
  const std::vector<Elt>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  bool IsMonic() const { return !IsZero() && coeffs_.back() == 1; }
  Elt Lead() const { return IsZero() ? 0 : coeffs_.back(); }
  Elt Coeff(int i) const {
    return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }

  Elt Eval(Elt x) const;
  Polynomial Monic() const;
  Polynomial Derivative() const;
  Polynomial Scale(Elt c) const;
  // p(z + alpha)
  Polynomial Shift(Elt alpha) const;
  // z^d p(1/z) for d >= degree().
  Polynomial Reverse(int d) const;
  // Largest e with z^e dividing p; p must be nonzero.
  int LowestDegree() const;
  Polynomial Pow(unsigned e) const;

  std::string ToString() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void Trim();

  FiniteField field_;
  std::vector<Elt> coeffs_;
};

// Throws kDivisionByZero for b = 0.
std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b);
// Monic gcd (zero if both are zero).
Polynomial Gcd(Polynomial a, Polynomial b);

// Canonical order: by degree, then coefficients compared from the constant
// term upward.
bool CanonicalLess(const Polynomial& a, const Polynomial& b);

// Trial division by every monic polynomial of degree 1..deg/2.
bool IsIrreducible(const Polynomial& p);

// Monic irreducible factors with multiplicities in canonical order; the
// leading coefficient is dropped.
std::vector<std::pair<Polynomial, int>> Factor(const Polynomial& p);

// All monic polynomials of the given degree, in canonical order.
std::vector<Polynomial> MonicPolynomials(const FiniteField& field, int degree);

}  // namespace selfdual

#endif  // SELFDUAL_POLYNOMIAL_H_
