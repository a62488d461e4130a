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

#include "selfdual/matrix.h"

#include <algorithm>
#include <string>
#include <utility>

#include "selfdual/error.h"

namespace selfdual {

Matrix::Matrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(rows * cols, 0) {}

Matrix Matrix::Identity(const FiniteField& field, std::size_t n) {
  Matrix id(field, n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

Matrix Matrix::FromRows(const FiniteField& field, std::size_t cols,
                        const std::vector<Vector>& rows) {
  Matrix out(field, 0, cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw Error(ErrorCode::kLengthMismatch,
                  "row of length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(cols));
    }
    out.AppendRow(row);
  }
  return out;
}

std::vector<Vector> Matrix::RowVectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto row = Row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

void Matrix::AppendRow(std::span<const Elt> row) {
  if (row.size() != cols_) {
    throw Error(ErrorCode::kLengthMismatch, "appended row has wrong length");
  }
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::Transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "matrix product shape mismatch");
  }
  const FiniteField& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elt aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.Add(out(i, j), f.Mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

RrefResult Rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const FiniteField& f = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(pivot, c), a(row, c));
      }
    }
    const Elt inv = f.Inv(a(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.Mul(a(row, c), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Elt factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.Sub(a(r, c), f.Mul(factor, a(row, c)));
      }
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t Rank(const Matrix& m) { return Rref(m).rank; }

Matrix KernelBasis(const Matrix& m) {
  const RrefResult r = Rref(m);
  const FiniteField& f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;

  Matrix basis(f, 0, n);
  Vector v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivot_cols[i]] = f.Neg(r.reduced(i, free));
    }
    basis.AppendRow(v);
  }
  // Vectors built this way are independent; reduce them to canonical form.
  return Rref(basis).reduced;
}

Vector Solve(const Matrix& m, std::span<const Elt> b) {
  if (b.size() != m.rows()) {
    throw Error(ErrorCode::kLengthMismatch, "right-hand side length mismatch");
  }
  const FiniteField& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = Rref(aug);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == m.cols()) {
    throw Error(ErrorCode::kInconsistent, "linear system has no solution");
  }
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) {
    x[red.pivot_cols[i]] = red.reduced(i, m.cols());
  }
  return x;
}

}  // namespace selfdual
