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

#include "selfdual/selfdual.h"

#include <string>
#include <utility>

#include "selfdual/error.h"

namespace selfdual {
namespace {

void RequireStar(const FiniteField& field, std::size_t n) {
  if (!CheckStar(field.q(), n).satisfied) {
    throw Error(ErrorCode::kStarViolated,
                "no self-dual code of length " + std::to_string(n) +
                    " exists over F_" + std::to_string(field.q()));
  }
}

// Basis w_1..w_t of a complement of C inside C^perp, so that C^perp/C has
// the classes of the w_i as a basis.
std::vector<Vector> ComplementInDual(const LinearCode& code) {
  const LinearCode dual = Dual(code);
  Matrix span = code.generator();
  std::vector<Vector> out;
  for (std::size_t r = 0; r < dual.dimension(); ++r) {
    Matrix trial = span;
    trial.AppendRow(dual.generator().Row(r));
    if (Rank(trial) > span.rows()) {
      span = std::move(trial);
      auto row = dual.generator().Row(r);
      out.emplace_back(row.begin(), row.end());
    }
  }
  return out;
}

Vector Combine(const FiniteField& f, const std::vector<Vector>& basis,
               const Vector& coeffs, std::size_t n) {
  Vector x(n, 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) {
      x[c] = f.Add(x[c], f.Mul(coeffs[i], basis[i][c]));
    }
  }
  return x;
}

// Characteristic 2: <x, x> = (sum x_i)^2, so isotropy is the vanishing of the
// coordinate-sum functional. Returns coefficients over `basis`.
Vector IsotropicCoeffsChar2(const FiniteField& f,
                            const std::vector<Vector>& basis) {
  Matrix functional(f, 1, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Elt s = 0;
    for (Elt e : basis[i]) s = f.Add(s, e);
    functional(0, i) = s;
  }
  const Matrix kernel = KernelBasis(functional);
  auto row = kernel.Row(0);
  return Vector(row.begin(), row.end());
}

// Odd characteristic: diagonalize the Gram matrix by symmetric elimination,
// then solve a diagonal quadratic form.
Vector IsotropicCoeffsOdd(const FiniteField& f,
                          const std::vector<Vector>& basis) {
  const std::size_t t = basis.size();
  Matrix gram(f, t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      gram(i, j) = Inner(f, basis[i], basis[j]);
    }
  }
  // Rows of `change` express the current basis in terms of `basis`.
  Matrix change = Matrix::Identity(f, t);

  for (std::size_t i = 0; i < t; ++i) {
    if (gram(i, i) == 0) {
      // The current basis vector is already isotropic.
      auto row = change.Row(i);
      return Vector(row.begin(), row.end());
    }
    const Elt inv = f.Inv(gram(i, i));
    for (std::size_t j = i + 1; j < t; ++j) {
      if (gram(j, i) == 0) continue;
      const Elt factor = f.Mul(gram(j, i), inv);
      // row_j -= factor * row_i, then col_j -= factor * col_i.
      for (std::size_t c = 0; c < t; ++c) {
        gram(j, c) = f.Sub(gram(j, c), f.Mul(factor, gram(i, c)));
        change(j, c) = f.Sub(change(j, c), f.Mul(factor, change(i, c)));
      }
      for (std::size_t r = 0; r < t; ++r) {
        gram(r, j) = f.Sub(gram(r, j), f.Mul(factor, gram(r, i)));
      }
    }
  }

  // Diagonal form a_1 X^2 + a_2 Y^2 + a_3 Z^2 + ... with all a_i nonzero.
  const Elt a1 = gram(0, 0);
  const Elt a2 = gram(1, 1);
  Vector diag_coeffs(t, 0);
  if (t == 2) {
    // a_1 + a_2 y^2 = 0
    auto y = f.Sqrt(f.Neg(f.Div(a1, a2)));
    if (!y) {
      throw Error(ErrorCode::kStarViolated,
                  "anisotropic plane in C^perp/C; no self-dual extension");
    }
    diag_coeffs[0] = 1;
    diag_coeffs[1] = *y;
  } else {
    // a_1 x^2 + a_2 y^2 = -a_3 always has a solution for nonzero a_i.
    const Elt a3 = gram(2, 2);
    bool found = false;
    for (Elt x = 0; x < f.q() && !found; ++x) {
      const Elt rest = f.Sub(f.Neg(a3), f.Mul(a1, f.Mul(x, x)));
      if (auto y = f.Sqrt(f.Div(rest, a2))) {
        diag_coeffs[0] = x;
        diag_coeffs[1] = *y;
        diag_coeffs[2] = 1;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kNoSolution, "ternary form has no solution");
    }
  }
  // Back to coefficients over `basis`.
  Vector coeffs(t, 0);
  for (std::size_t i = 0; i < t; ++i) {
    if (diag_coeffs[i] == 0) continue;
    for (std::size_t c = 0; c < t; ++c) {
      coeffs[c] = f.Add(coeffs[c], f.Mul(diag_coeffs[i], change(i, c)));
    }
  }
  return coeffs;
}

}  // namespace

StarCondition CheckStar(std::uint64_t q, std::size_t n) {
  const bool ok = n % 2 == 0 && (q % 4 != 3 || n % 4 == 0);
  return {q, n, ok};
}

bool ExistsSelfDual(std::uint64_t q, std::size_t n) {
  if (!PrimePowerDecompose(q)) {
    throw Error(ErrorCode::kNotPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  return CheckStar(q, n).satisfied;
}

LinearCode BaseSelfDual(const FiniteField& f, std::size_t n) {
  RequireStar(f, n);
  std::vector<Vector> rows;
  if (f.p() == 2 || f.q() % 4 == 1) {
    const Elt alpha = SqrtOfMinusOne(f);
    for (std::size_t i = 0; i < n / 2; ++i) {
      Vector c(n, 0);
      c[2 * i] = alpha;
      c[2 * i + 1] = 1;
      rows.push_back(std::move(c));
    }
  } else {
    const auto [alpha, beta] = SolveAlphaBeta(f);
    for (std::size_t i = 0; i < n / 4; ++i) {
      Vector c(n, 0);
      Vector d(n, 0);
      c[4 * i] = alpha;
      c[4 * i + 1] = beta;
      c[4 * i + 2] = 1;
      d[4 * i] = f.Neg(beta);
      d[4 * i + 1] = alpha;
      d[4 * i + 3] = 1;
      rows.push_back(std::move(c));
      rows.push_back(std::move(d));
    }
  }
  LinearCode code = LinearCode::FromRows(f, n, rows);
  if (!IsSelfDual(code)) {
    throw Error(ErrorCode::kNoSolution, "base construction is not self-dual");
  }
  return code;
}

Vector IsotropicInComplement(const LinearCode& code) {
  const FiniteField& f = code.field();
  const std::size_t n = code.length();
  if (!IsSelfOrthogonal(code)) {
    throw Error(ErrorCode::kNotSelfOrthogonal, "code is not self-orthogonal");
  }
  RequireStar(f, n);
  if (2 * code.dimension() >= n) {
    throw Error(ErrorCode::kAlreadyMaximal,
                "code already has dimension n/2 = " + std::to_string(n / 2));
  }
  const std::vector<Vector> basis = ComplementInDual(code);
  const Vector coeffs = f.p() == 2 ? IsotropicCoeffsChar2(f, basis)
                                   : IsotropicCoeffsOdd(f, basis);
  return Combine(f, basis, coeffs, n);
}

LinearCode EmbedSelfDual(const LinearCode& code) {
  const FiniteField& f = code.field();
  const std::size_t n = code.length();
  if (!IsSelfOrthogonal(code)) {
    throw Error(ErrorCode::kNotSelfOrthogonal, "code is not self-orthogonal");
  }
  RequireStar(f, n);
  LinearCode current = code;
  while (2 * current.dimension() < n) {
    const Vector x = IsotropicInComplement(current);
    std::vector<Vector> rows = current.generator().RowVectors();
    rows.push_back(x);
    LinearCode next = LinearCode::FromRows(f, n, rows);
    if (next.dimension() != current.dimension() + 1 ||
        !IsSelfOrthogonal(next)) {
      throw Error(ErrorCode::kNoSolution, "augmentation step failed");
    }
    current = std::move(next);
  }
  if (!IsSelfDual(current) || !current.Contains(code)) {
    throw Error(ErrorCode::kNoSolution, "embedding failed verification");
  }
  return current;
}

LinearCode RandomSelfOrthogonal(const FiniteField& f, std::size_t n,
                                std::size_t k, Rng& rng) {
  if (2 * k > n) {
    throw Error(ErrorCode::kDomainError,
                "self-orthogonal codes have dimension at most n/2");
  }
  const LinearCode base = BaseSelfDual(f, n);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[UniformBelow(rng, i)]);
  }
  std::vector<Elt> sign(n);
  for (auto& s : sign) {
    s = UniformBelow(rng, 2) == 0 ? f.One() : f.Neg(f.One());
  }
  Matrix isometric(f, base.dimension(), n);
  for (std::size_t r = 0; r < base.dimension(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      isometric(r, perm[c]) = f.Mul(sign[c], base.generator()(r, c));
    }
  }
  while (true) {
    Matrix select(f, k, base.dimension());
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < base.dimension(); ++c) {
        select(r, c) = static_cast<Elt>(UniformBelow(rng, f.q()));
      }
    }
    if (Rank(select) == k) return LinearCode::FromMatrix(select * isometric);
  }
}

}  // namespace selfdual
