// Copyright 2026 The symnash Authors. All rights reserved.
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

#ifndef SYMNASH_MATRIX_H_
#define SYMNASH_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symnash/rational.h"

namespace symnash {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, Vector entries);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix Constant(std::size_t rows, std::size_t cols,
                                 const Rational& value);
  static RationalMatrix Identity(std::size_t n);
  static RationalMatrix Diagonal(std::span<const Rational> diagonal);
  // c * d^T.
  static RationalMatrix Outer(std::span<const Rational> c,
                              std::span<const Rational> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const Rational> entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector Row(std::size_t r) const;
  Vector Column(std::size_t c) const;

  RationalMatrix Transpose() const;
  bool IsZero() const;
  Rational MinEntry() const;
  Rational MaxEntry() const;

  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
  friend bool operator==(const RationalMatrix& a,
                         const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector entries_;
};

// M z.
Vector Multiply(const RationalMatrix& m, std::span<const Rational> z);
// z^T M.
Vector LeftMultiply(std::span<const Rational> z, const RationalMatrix& m);
// u^T M v.
Rational Bilinear(std::span<const Rational> u, const RationalMatrix& m,
                  std::span<const Rational> v);
Rational Dot(std::span<const Rational> u, std::span<const Rational> v);
Rational Sum(std::span<const Rational> v);
Vector Scale(const Rational& s, std::span<const Rational> v);

// Solution set of a linear system M z = rhs: a particular solution plus the
// dimension of the null space of M.
struct LinearSolution {
  Vector particular;
  std::size_t nullity = 0;
  bool unique() const { return nullity == 0; }
};

// Exact Gauss-Jordan elimination. Returns nullopt when the system is
// inconsistent; free variables are set to zero in the particular solution.
std::optional<LinearSolution> SolveLinearSystem(const RationalMatrix& m,
                                                std::span<const Rational> rhs);

std::string FormatVector(std::span<const Rational> v);

}  // namespace symnash

#endif  // SYMNASH_MATRIX_H_
