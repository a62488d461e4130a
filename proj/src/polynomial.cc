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

#include "selfdual/polynomial.h"

#include <algorithm>
#include <sstream>

#include "selfdual/error.h"

namespace selfdual {

Polynomial::Polynomial(FiniteField field, std::vector<Elt> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  Trim();
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::Constant(const FiniteField& field, Elt c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::Monomial(const FiniteField& field, int k) {
  std::vector<Elt> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::Linear(const FiniteField& field, Elt alpha) {
  return Polynomial(field, {field.Neg(alpha), 1});
}

Elt Polynomial::Eval(Elt x) const {
  Elt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.Add(field_.Mul(acc, x), *it);
  }
  return acc;
}

Polynomial Polynomial::Scale(Elt c) const {
  std::vector<Elt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = field_.Mul(c, coeffs_[i]);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::Monic() const {
  if (IsZero()) return *this;
  return Scale(field_.Inv(Lead()));
}

Polynomial Polynomial::Derivative() const {
  std::vector<Elt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(field_.Mul(field_.FromInt(static_cast<std::int64_t>(i)),
                             coeffs_[i]));
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::Shift(Elt alpha) const {
  // Horner in the ring: acc = acc * (z + alpha) + c_i.
  Polynomial acc(field_);
  const Polynomial step(field_, {alpha, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step + Constant(field_, *it);
  }
  return acc;
}

Polynomial Polynomial::Reverse(int d) const {
  std::vector<Elt> out(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= degree(); ++i) {
    out[static_cast<std::size_t>(d - i)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return Polynomial(field_, std::move(out));
}

int Polynomial::LowestDegree() const {
  int i = 0;
  while (i <= degree() && coeffs_[static_cast<std::size_t>(i)] == 0) ++i;
  return i;
}

Polynomial Polynomial::Pow(unsigned e) const {
  Polynomial result = Constant(field_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string Polynomial::ToString() const {
  if (IsZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Elt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const FiniteField& f = a.field();
  std::vector<Elt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.Add(i < a.coeffs_.size() ? a.coeffs_[i] : 0,
                   i < b.coeffs_.size() ? b.coeffs_[i] : 0);
  }
  return Polynomial(f, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + b.Scale(a.field().Neg(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const FiniteField& f = a.field();
  if (a.IsZero() || b.IsZero()) return Polynomial(f);
  std::vector<Elt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.Add(out[i + j], f.Mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(f, std::move(out));
}

std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b) {
  const FiniteField& f = a.field();
  if (b.IsZero()) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  std::vector<Elt> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(f), a};
  std::vector<Elt> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const Elt inv_lead = f.Inv(b.Lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elt c = f.Mul(rem[static_cast<std::size_t>(i)], inv_lead);
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = f.Sub(slot, f.Mul(c, b.Coeff(j)));
    }
  }
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial Gcd(Polynomial a, Polynomial b) {
  while (!b.IsZero()) {
    Polynomial r = DivMod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

bool CanonicalLess(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

std::vector<Polynomial> MonicPolynomials(const FiniteField& field,
                                         int degree) {
  const auto d = static_cast<std::size_t>(degree);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= field.q();
  std::vector<Polynomial> out;
  out.reserve(total);
  std::vector<Elt> c(d + 1, 0);
  c[d] = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // The constant term is the most significant digit, matching
    // CanonicalLess.
    std::uint64_t t = idx;
    for (std::size_t i = d; i-- > 0;) {
      c[i] = static_cast<Elt>(t % field.q());
      t /= field.q();
    }
    out.emplace_back(field, c);
  }
  return out;
}

bool IsIrreducible(const Polynomial& p) {
  if (p.degree() < 1) return false;
  for (int d = 1; 2 * d <= p.degree(); ++d) {
    for (const auto& g : MonicPolynomials(p.field(), d)) {
      if (DivMod(p, g).second.IsZero()) return false;
    }
  }
  return true;
}

std::vector<std::pair<Polynomial, int>> Factor(const Polynomial& p) {
  if (p.IsZero()) {
    throw Error(ErrorCode::kZeroFunction, "factorization of zero");
  }
  const FiniteField& f = p.field();
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial rest = p.Monic();
  auto strip = [&](const Polynomial& g) {
    int mult = 0;
    while (true) {
      auto [quot, rem] = DivMod(rest, g);
      if (!rem.IsZero()) break;
      rest = std::move(quot);
      ++mult;
    }
    if (mult > 0) out.emplace_back(g, mult);
  };
  // Linear factors by root testing.
  for (Elt alpha = 0; alpha < f.q() && rest.degree() >= 1; ++alpha) {
    if (rest.Eval(alpha) == 0) strip(Polynomial::Linear(f, alpha));
  }
  // Once all factors below degree d are gone, any monic divisor of degree d
  // is irreducible.
  for (int d = 2; 2 * d <= rest.degree(); ++d) {
    for (const auto& g : MonicPolynomials(f, d)) {
      if (2 * d > rest.degree()) break;
      strip(g);
    }
  }
  if (rest.degree() >= 1) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CanonicalLess(a.first, b.first);
  });
  return out;
}

}  // namespace selfdual
