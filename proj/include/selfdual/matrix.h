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

#ifndef SELFDUAL_MATRIX_H_
#define SELFDUAL_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "selfdual/finite_field.h"

namespace selfdual {

using Vector = std::vector<Elt>;

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FiniteField field, std::size_t rows, std::size_t cols);

  static Matrix Identity(const FiniteField& field, std::size_t n);
  // All rows must have length `cols`; throws kLengthMismatch otherwise.
  static Matrix FromRows(const FiniteField& field, std::size_t cols,
                         const std::vector<Vector>& rows);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elt operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Elt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elt> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elt> Row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::vector<Vector> RowVectors() const;

  void AppendRow(std::span<const Elt> row);
  Matrix Transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elt> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan form. Zero rows are kept at the bottom so the shape matches
// the input.
RrefResult Rref(const Matrix& m);

std::size_t Rank(const Matrix& m);

// Basis of {x : M x^T = 0}, in reduced row-echelon form.
Matrix KernelBasis(const Matrix& m);

// A particular solution of M x = b with free variables set to zero.
// Throws kInconsistent when no solution exists.
Vector Solve(const Matrix& m, std::span<const Elt> b);

}  // namespace selfdual

#endif  // SELFDUAL_MATRIX_H_
