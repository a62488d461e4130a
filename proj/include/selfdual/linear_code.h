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

#ifndef SELFDUAL_LINEAR_CODE_H_
#define SELFDUAL_LINEAR_CODE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "selfdual/finite_field.h"
#include "selfdual/matrix.h"
#include "selfdual/rational.h"

namespace selfdual {

// A linear [n, k] code over F_q. The generator matrix is always kept in
// reduced row-echelon form with exactly k rows, so two codes are equal iff
// their generators are equal.
class LinearCode {
 public:
  // Code spanned by `rows`; throws kLengthMismatch if a row is not length n.
  static LinearCode FromRows(const FiniteField& field, std::size_t n,
                             const std::vector<Vector>& rows);
  static LinearCode FromMatrix(const Matrix& gen);
  static LinearCode ZeroCode(const FiniteField& field, std::size_t n);

  const FiniteField& field() const { return gen_.field(); }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }

  bool Contains(std::span<const Elt> word) const;
  bool Contains(const LinearCode& sub) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.gen_ == b.gen_;
  }

 private:
  LinearCode(std::size_t n, Matrix gen) : n_(n), gen_(std::move(gen)) {}

  std::size_t n_;
  Matrix gen_;
};

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;

  Rational Rate() const {
    return Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
  }
  Rational RelativeDistance() const {
    return Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n));
  }
};

// <x, y> = sum x_i y_i. Throws kLengthMismatch.
Elt Inner(const FiniteField& field, std::span<const Elt> x,
          std::span<const Elt> y);

std::size_t Weight(std::span<const Elt> x);

LinearCode Dual(const LinearCode& code);

bool IsSelfOrthogonal(const LinearCode& code);
bool IsSelfDual(const LinearCode& code);

struct MinDistanceOptions {
  // Maximum number of codewords to evaluate (one per projective class).
  std::uint64_t budget = std::uint64_t{1} << 24;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Number of projective classes (q^k - 1)/(q - 1), saturated at UINT64_MAX.
std::uint64_t ProjectiveCount(std::uint32_t q, std::size_t k);

// Exact minimum distance. Enumerates one codeword per projective class (the
// nonzero codewords whose first nonzero message symbol is 1). Throws
// kZeroCode for k = 0 and kBudgetExceeded when the class count is over
// budget.
std::size_t MinDistance(const LinearCode& code,
                        const MinDistanceOptions& options = {});

}  // namespace selfdual

#endif  // SELFDUAL_LINEAR_CODE_H_
