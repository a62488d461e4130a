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

#include "selfdual/linear_code.h"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>

#include "selfdual/error.h"

namespace selfdual {
namespace {

Matrix NonzeroRows(const RrefResult& r) {
  Matrix out(r.reduced.field(), 0, r.reduced.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.AppendRow(r.reduced.Row(i));
  return out;
}

// Scans the projective indices [begin, end). Index layout: rows are grouped
// by the leading message position i, each group holding q^(k-1-i) words whose
// trailing message symbols count up in base q (last row least significant).
std::size_t ScanRange(const Matrix& gen, std::uint64_t begin,
                      std::uint64_t end) {
  const FiniteField& f = gen.field();
  const std::size_t k = gen.rows();
  const std::size_t n = gen.cols();
  const std::uint32_t q = f.q();

  std::vector<std::uint64_t> group_size(k);
  for (std::size_t i = 0; i < k; ++i) {
    group_size[i] = 1;
    for (std::size_t j = i + 1; j < k; ++j) group_size[i] *= q;
  }

  std::size_t lead = 0;
  std::uint64_t offset = begin;
  while (offset >= group_size[lead]) offset -= group_size[lead++];

  std::vector<Elt> digits(k, 0);
  Vector word(n);
  auto reset = [&](std::uint64_t t) {
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t j = k; j-- > lead + 1;) {
      digits[j] = static_cast<Elt>(t % q);
      t /= q;
    }
    auto g = gen.Row(lead);
    std::copy(g.begin(), g.end(), word.begin());
    for (std::size_t j = lead + 1; j < k; ++j) {
      if (digits[j] == 0) continue;
      auto row = gen.Row(j);
      for (std::size_t c = 0; c < n; ++c) {
        word[c] = f.Add(word[c], f.Mul(digits[j], row[c]));
      }
    }
  };
  auto add_scaled = [&](std::size_t j, Elt scale) {
    auto row = gen.Row(j);
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c] != 0) word[c] = f.Add(word[c], f.Mul(scale, row[c]));
    }
  };

  reset(offset);
  std::size_t best = n;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    best = std::min(best, Weight(word));
    if (best == 1 || idx + 1 == end) break;
    if (++offset == group_size[lead]) {
      ++lead;
      offset = 0;
      reset(0);
      continue;
    }
    for (std::size_t j = k; j-- > lead + 1;) {
      const Elt old = digits[j];
      const Elt next = old + 1 == q ? 0 : old + 1;
      digits[j] = next;
      add_scaled(j, f.Sub(next, old));
      if (next != 0) break;
    }
  }
  return best;
}

}  // namespace

LinearCode LinearCode::FromRows(const FiniteField& field, std::size_t n,
                                const std::vector<Vector>& rows) {
  return FromMatrix(Matrix::FromRows(field, n, rows));
}

LinearCode LinearCode::FromMatrix(const Matrix& gen) {
  return LinearCode(gen.cols(), NonzeroRows(Rref(gen)));
}

LinearCode LinearCode::ZeroCode(const FiniteField& field, std::size_t n) {
  return LinearCode(n, Matrix(field, 0, n));
}

bool LinearCode::Contains(std::span<const Elt> word) const {
  if (word.size() != n_) return false;
  Matrix m = gen_;
  m.AppendRow(word);
  return Rank(m) == dimension();
}

bool LinearCode::Contains(const LinearCode& sub) const {
  if (sub.n_ != n_ || !(sub.field() == field())) return false;
  Matrix m = gen_;
  for (std::size_t r = 0; r < sub.dimension(); ++r) {
    m.AppendRow(sub.gen_.Row(r));
  }
  return Rank(m) == dimension();
}

Elt Inner(const FiniteField& field, std::span<const Elt> x,
          std::span<const Elt> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "inner product of vectors with lengths " +
                    std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
  Elt acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc = field.Add(acc, field.Mul(x[i], y[i]));
  }
  return acc;
}

std::size_t Weight(std::span<const Elt> x) {
  return static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [](Elt e) { return e != 0; }));
}

LinearCode Dual(const LinearCode& code) {
  if (code.dimension() == 0) {
    return LinearCode::FromMatrix(
        Matrix::Identity(code.field(), code.length()));
  }
  return LinearCode::FromMatrix(KernelBasis(code.generator()));
}

bool IsSelfOrthogonal(const LinearCode& code) {
  const Matrix& g = code.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      if (Inner(code.field(), g.Row(i), g.Row(j)) != 0) return false;
    }
  }
  return true;
}

bool IsSelfDual(const LinearCode& code) {
  return 2 * code.dimension() == code.length() && IsSelfOrthogonal(code);
}

std::uint64_t ProjectiveCount(std::uint32_t q, std::size_t k) {
  // 1 + q + ... + q^(k-1)
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kMax - term) return kMax;
    total += term;
    if (i + 1 < k) {
      if (term > kMax / q) return kMax;
      term *= q;
    }
  }
  return total;
}

std::size_t MinDistance(const LinearCode& code,
                        const MinDistanceOptions& options) {
  const std::size_t k = code.dimension();
  if (k == 0) {
    throw Error(ErrorCode::kZeroCode, "minimum distance of the zero code");
  }
  const std::uint64_t total = ProjectiveCount(code.field().q(), k);
  if (total > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(total) + " codeword classes exceed budget " +
                    std::to_string(options.budget));
  }

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinPerWorker = std::uint64_t{1} << 14;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(
                                           1, total / kMinPerWorker)));
  if (threads <= 1) return ScanRange(code.generator(), 0, total);

  std::vector<std::size_t> partial(threads, code.length());
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      workers.emplace_back([&, t, begin, end] {
        partial[t] = ScanRange(code.generator(), begin, end);
      });
    }
  }
  return *std::min_element(partial.begin(), partial.end());
}

}  // namespace selfdual
