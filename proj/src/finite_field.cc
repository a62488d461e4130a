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

#include <algorithm>
#include <string>

#include "selfdual/error.h"

namespace selfdual {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
constexpr std::uint32_t kTableOrder = 256;

// Dense polynomials over F_p, low-to-high, used only to pick the modulus.
using PolyP = std::vector<std::uint64_t>;

void Trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t PowMod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// a mod f, f monic.
PolyP ModP(PolyP a, const PolyP& f, std::uint64_t p) {
  Trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    }
    Trim(a);
  }
  return a;
}

PolyP MulModP(const PolyP& a, const PolyP& b, const PolyP& f,
              std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return ModP(std::move(c), f, p);
}

PolyP GcdP(PolyP a, PolyP b, std::uint64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = PowMod(b.back(), p - 2, p);
    for (auto& c : b) c = c * inv % p;
    a = ModP(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1 for
// i = 1..m/2.
bool IsIrreducibleP(const PolyP& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  PolyP x_pow = ModP(PolyP{0, 1}, f, p);
  for (std::size_t i = 1; i <= m / 2; ++i) {
    // x_pow <- x_pow^p mod f
    PolyP base = x_pow;
    PolyP acc{1};
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = MulModP(acc, base, f, p);
      base = MulModP(base, base, f, p);
    }
    x_pow = acc;
    PolyP diff = x_pow;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    Trim(diff);
    if (diff.empty()) return false;
    PolyP g = GcdP(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> SmallestIrreducible(std::uint64_t p,
                                               std::uint32_t m) {
  if (m == 1) return {0, 1};
  // Candidate tuples (c_0, ..., c_{m-1}) in lexicographic order, c_0 most
  // significant.
  std::vector<std::uint64_t> c(m, 0);
  while (true) {
    PolyP f(c.begin(), c.end());
    f.push_back(1);
    if (f[0] != 0 && IsIrreducibleP(f, p)) {
      return std::vector<std::uint32_t>(f.begin(), f.end());
    }
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> PrimePowerDecompose(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, e);
}

FiniteField FiniteField::Make(std::uint64_t p, std::uint32_t m) {
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (m < 1) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "extension degree must be at least 1");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorCode::kDomainError, "field order exceeds 2^31");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = SmallestIrreducible(p, m);
  FiniteField field(impl);
  if (q <= kTableOrder) {
    const std::size_t qq = q;
    impl->add_table.resize(qq * qq);
    impl->mul_table.resize(qq * qq);
    impl->inv_table.assign(qq, 0);
    for (Elt a = 0; a < qq; ++a) {
      for (Elt b = 0; b < qq; ++b) {
        impl->add_table[a * qq + b] =
            static_cast<std::uint16_t>(field.AddSlow(a, b));
        impl->mul_table[a * qq + b] =
            static_cast<std::uint16_t>(field.MulSlow(a, b));
      }
    }
    for (Elt a = 1; a < qq; ++a) {
      for (Elt b = 1; b < qq; ++b) {
        if (impl->mul_table[a * qq + b] == 1) {
          impl->inv_table[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
  }
  return field;
}

FiniteField FiniteField::OfOrder(std::uint64_t q) {
  auto pe = PrimePowerDecompose(q);
  if (!pe) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  return Make(pe->first, pe->second);
}

Elt FiniteField::FromInt(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  return static_cast<Elt>(((v % p) + p) % p);
}

Elt FiniteField::AddSlow(Elt a, Elt b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->m == 1) return static_cast<Elt>((std::uint64_t{a} + b) % p);
  if (p == 2) return a ^ b;
  Elt out = 0;
  Elt place = 1;
  for (std::uint32_t i = 0; i < impl_->m; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

Elt FiniteField::MulSlow(Elt a, Elt b) const {
  const std::uint64_t p = impl_->p;
  const std::uint32_t m = impl_->m;
  if (m == 1) return static_cast<Elt>(std::uint64_t{a} * b % p);
  PolyP prod(2 * m - 1, 0);
  const auto ca = Coordinates(a);
  const auto cb = Coordinates(b);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
    }
  }
  PolyP f(impl_->modulus.begin(), impl_->modulus.end());
  PolyP r = ModP(std::move(prod), f, p);
  std::vector<std::uint32_t> coords(m, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    coords[i] = static_cast<std::uint32_t>(r[i]);
  }
  return FromCoordinates(coords);
}

Elt FiniteField::Add(Elt a, Elt b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->q + b];
  return AddSlow(a, b);
}

Elt FiniteField::Neg(Elt a) const {
  const std::uint32_t p = impl_->p;
  if (p == 2) return a;
  Elt out = 0;
  Elt place = 1;
  for (std::uint32_t i = 0; i < impl_->m; ++i) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

Elt FiniteField::Sub(Elt a, Elt b) const { return Add(a, Neg(b)); }

Elt FiniteField::Mul(Elt a, Elt b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[a * impl_->q + b];
  return MulSlow(a, b);
}

Elt FiniteField::Pow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e > 0) {
    if (e & 1) r = Mul(r, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt FiniteField::Inv(Elt a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return Pow(a, impl_->q - 2);
}

Elt FiniteField::Div(Elt a, Elt b) const {
  if (b == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return Mul(a, Inv(b));
}

std::vector<std::uint32_t> FiniteField::Coordinates(Elt a) const {
  std::vector<std::uint32_t> c(impl_->m);
  for (auto& digit : c) {
    digit = a % impl_->p;
    a /= impl_->p;
  }
  return c;
}

Elt FiniteField::FromCoordinates(std::span<const std::uint32_t> coords) const {
  Elt out = 0;
  Elt place = 1;
  for (std::uint32_t i = 0; i < impl_->m && i < coords.size(); ++i) {
    out += (coords[i] % impl_->p) * place;
    place *= impl_->p;
  }
  return out;
}

bool FiniteField::IsSquare(Elt a) const {
  if (a == 0 || impl_->p == 2) return true;
  return Pow(a, (impl_->q - 1) / 2) == 1;
}

std::optional<Elt> FiniteField::Sqrt(Elt a) const {
  if (!IsSquare(a)) return std::nullopt;
  for (Elt y = 0; y < impl_->q; ++y) {
    if (Mul(y, y) == a) return y;
  }
  return std::nullopt;
}

Elt SqrtOfMinusOne(const FiniteField& field) {
  if (field.p() == 2) return field.One();
  if (field.q() % 4 == 3) {
    throw Error(ErrorCode::kNoSolution,
                "-1 is not a square in F_" + std::to_string(field.q()));
  }
  return *field.Sqrt(field.Neg(field.One()));
}

std::pair<Elt, Elt> SolveAlphaBeta(const FiniteField& field) {
  if (field.p() == 2 || field.q() % 4 != 3) {
    throw Error(ErrorCode::kWrongResidueClass,
                "alpha^2 + beta^2 + 1 = 0 is only needed for q = 3 mod 4");
  }
  const Elt minus_one = field.Neg(field.One());
  for (Elt alpha = 0; alpha < field.q(); ++alpha) {
    const Elt target = field.Sub(minus_one, field.Mul(alpha, alpha));
    if (auto beta = field.Sqrt(target)) return {alpha, *beta};
  }
  throw Error(ErrorCode::kNoSolution, "no solution to alpha^2 + beta^2 = -1");
}

}  // namespace selfdual
