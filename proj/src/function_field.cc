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

#include "selfdual/function_field.h"

#include <sstream>

#include "selfdual/error.h"

namespace selfdual {
namespace {

// Coefficient of t^index in the power series num(t)/den(t), den(0) != 0.
Elt SeriesCoeff(const Polynomial& num, const Polynomial& den, int index) {
  const FiniteField& f = num.field();
  const Elt inv0 = f.Inv(den.Coeff(0));
  std::vector<Elt> c(static_cast<std::size_t>(index) + 1, 0);
  for (int i = 0; i <= index; ++i) {
    Elt acc = num.Coeff(i);
    for (int j = 1; j <= i; ++j) {
      acc = f.Sub(acc, f.Mul(den.Coeff(j), c[static_cast<std::size_t>(i - j)]));
    }
    c[static_cast<std::size_t>(i)] = f.Mul(acc, inv0);
  }
  return c.back();
}

int Multiplicity(Polynomial p, const Polynomial& prime) {
  int mult = 0;
  while (!p.IsZero()) {
    auto [quot, rem] = DivMod(p, prime);
    if (!rem.IsZero()) break;
    p = std::move(quot);
    ++mult;
  }
  return mult;
}

void RequireNonzero(const RationalFunction& f) {
  if (f.IsZero()) {
    throw Error(ErrorCode::kZeroFunction, "valuation of the zero function");
  }
}

}  // namespace

Place Place::Finite(const Polynomial& poly) {
  if (!poly.IsMonic() || !IsIrreducible(poly)) {
    throw Error(ErrorCode::kDomainError,
                "place polynomial must be monic irreducible: " +
                    poly.ToString());
  }
  return Place(poly, false);
}

Place Place::Rational(const FiniteField& field, Elt alpha) {
  return Place(Polynomial::Linear(field, alpha), false);
}

Place Place::Infinity(const FiniteField& field) {
  return Place(Polynomial(field), true);
}

Elt Place::Root() const {
  if (infinite_ || poly_.degree() != 1) {
    throw Error(ErrorCode::kNonRationalPlace,
                "place " + ToString() + " has no root in F_q");
  }
  return field().Neg(poly_.Coeff(0));
}

std::string Place::ToString() const {
  if (infinite_) return "P_inf";
  if (poly_.degree() == 1) return "P_" + std::to_string(Root());
  return "P[" + poly_.ToString() + "]";
}

bool operator<(const Place& a, const Place& b) {
  if (a.infinite_ != b.infinite_) return b.infinite_;
  if (a.infinite_) return false;
  if (a.Degree() != b.Degree()) return a.Degree() < b.Degree();
  if (a.Degree() == 1) return a.Root() < b.Root();
  return a.poly_.coeffs() < b.poly_.coeffs();
}

Divisor Divisor::Of(const Place& place, std::int64_t coeff) {
  Divisor d;
  d.Add(place, coeff);
  return d;
}

std::int64_t Divisor::Coeff(const Place& place) const {
  auto it = terms_.find(place);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::Add(const Place& place, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(place, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Divisor::Degree() const {
  std::int64_t deg = 0;
  for (const auto& [place, c] : terms_) deg += c * place.Degree();
  return deg;
}

std::vector<Place> Divisor::Support() const {
  std::vector<Place> out;
  for (const auto& [place, c] : terms_) out.push_back(place);
  return out;
}

bool Divisor::IsEven() const {
  for (const auto& [place, c] : terms_) {
    if (c % 2 != 0) return false;
  }
  return true;
}

bool Divisor::IsEffective() const {
  for (const auto& [place, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

Divisor Divisor::FloorEven() const {
  Divisor out;
  for (const auto& [place, c] : terms_) {
    out.Add(place, c % 2 == 0 ? c : c - 1);
  }
  return out;
}

Divisor Divisor::CeilEven() const {
  Divisor out;
  for (const auto& [place, c] : terms_) {
    out.Add(place, c % 2 == 0 ? c : c + 1);
  }
  return out;
}

Divisor Divisor::Half() const {
  if (!IsEven()) {
    throw Error(ErrorCode::kDomainError, "cannot halve odd divisor " +
                                             ToString());
  }
  Divisor out;
  for (const auto& [place, c] : terms_) out.Add(place, c / 2);
  return out;
}

std::string Divisor::ToString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [place, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << "*";
    out << place.ToString();
  }
  return out.str();
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [place, c] : b.terms_) out.Add(place, c);
  return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  Divisor out = a;
  for (const auto& [place, c] : b.terms_) out.Add(place, -c);
  return out;
}

Divisor operator*(std::int64_t k, const Divisor& a) {
  Divisor out;
  for (const auto& [place, c] : a.terms_) out.Add(place, k * c);
  return out;
}

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den)
    : num_(num), den_(den) {
  if (den.IsZero()) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  if (num_.IsZero()) {
    den_ = Polynomial::Constant(den.field(), 1);
    return;
  }
  const Polynomial g = Gcd(num_, den_);
  num_ = DivMod(num_, g).first;
  den_ = DivMod(den_, g).first;
  const Elt inv = den_.field().Inv(den_.Lead());
  num_ = num_.Scale(inv);
  den_ = den_.Scale(inv);
}

RationalFunction::RationalFunction(const Polynomial& poly)
    : RationalFunction(poly, Polynomial::Constant(poly.field(), 1)) {}

Elt RationalFunction::ValueAt(const Place& place) const {
  const FiniteField& f = field();
  if (!place.IsRational()) {
    throw Error(ErrorCode::kNonRationalPlace,
                "cannot evaluate at " + place.ToString());
  }
  if (place.IsInfinite()) {
    if (num_.degree() > den_.degree()) {
      throw Error(ErrorCode::kDomainError, ToString() + " has a pole at P_inf");
    }
    return num_.degree() == den_.degree() ? f.Div(num_.Lead(), den_.Lead())
                                          : 0;
  }
  const Elt alpha = place.Root();
  const Elt d = den_.Eval(alpha);
  if (d == 0) {
    throw Error(ErrorCode::kDomainError,
                ToString() + " has a pole at " + place.ToString());
  }
  return f.Div(num_.Eval(alpha), d);
}

std::string RationalFunction::ToString() const {
  if (den_.degree() == 0) return num_.ToString();
  return "(" + num_.ToString() + ")/(" + den_.ToString() + ")";
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::int64_t Valuation(const RationalFunction& f, const Place& place) {
  RequireNonzero(f);
  if (place.IsInfinite()) return f.den().degree() - f.num().degree();
  return Multiplicity(f.num(), place.Poly()) -
         Multiplicity(f.den(), place.Poly());
}

Divisor PrincipalDivisor(const RationalFunction& f) {
  RequireNonzero(f);
  Divisor out;
  for (const auto& [poly, mult] : Factor(f.num())) {
    out.Add(Place::Finite(poly), mult);
  }
  for (const auto& [poly, mult] : Factor(f.den())) {
    out.Add(Place::Finite(poly), -mult);
  }
  out.Add(Place::Infinity(f.field()), f.den().degree() - f.num().degree());
  return out;
}

std::int64_t Valuation(const Differential& omega, const Place& place) {
  return Valuation(omega.f, place) - (place.IsInfinite() ? 2 : 0);
}

Divisor DifferentialDivisor(const Differential& omega) {
  return PrincipalDivisor(omega.f) +
         Divisor::Of(Place::Infinity(omega.f.field()), -2);
}

Elt Residue(const Differential& omega, const Place& place) {
  if (!place.IsRational()) {
    throw Error(ErrorCode::kNonRationalPlace,
                "residue at non-rational place " + place.ToString());
  }
  const RationalFunction& f = omega.f;
  const FiniteField& field = f.field();
  if (f.IsZero()) return 0;
  if (place.IsInfinite()) {
    // z = 1/t, dz = -t^-2 dt: f dz = -t^(deg den - deg num - 2) revN/revD dt.
    const int index = 1 + f.num().degree() - f.den().degree();
    if (index < 0) return 0;
    const Polynomial rev_num = f.num().Reverse(f.num().degree());
    const Polynomial rev_den = f.den().Reverse(f.den().degree());
    return field.Neg(SeriesCoeff(rev_num, rev_den, index));
  }
  // z = alpha + t.
  const Elt alpha = place.Root();
  const Polynomial num = f.num().Shift(alpha);
  const Polynomial den = f.den().Shift(alpha);
  const int pole = den.LowestDegree();
  if (pole == 0) return 0;
  std::vector<Elt> unit(den.coeffs().begin() + pole, den.coeffs().end());
  return SeriesCoeff(num, Polynomial(field, std::move(unit)), pole - 1);
}

std::vector<RationalFunction> RiemannRochBasis(const FiniteField& field,
                                               const Divisor& a) {
  Polynomial zeros_allowed = Polynomial::Constant(field, 1);   // d(z)
  Polynomial zeros_required = Polynomial::Constant(field, 1);  // m(z)
  std::int64_t at_infinity = 0;
  for (const auto& [place, c] : a.terms()) {
    if (place.IsInfinite()) {
      at_infinity = c;
    } else if (c > 0) {
      zeros_allowed = zeros_allowed * place.Poly().Pow(static_cast<unsigned>(c));
    } else {
      zeros_required =
          zeros_required * place.Poly().Pow(static_cast<unsigned>(-c));
    }
  }
  const std::int64_t top =
      zeros_allowed.degree() + at_infinity - zeros_required.degree();
  std::vector<RationalFunction> basis;
  for (std::int64_t j = 0; j <= top; ++j) {
    basis.emplace_back(
        Polynomial::Monomial(field, static_cast<int>(j)) * zeros_required,
        zeros_allowed);
  }
  return basis;
}

}  // namespace selfdual
