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

#include "symnash/matrix.h"

#include <algorithm>
#include <utility>

#include "symnash/errors.h"

namespace symnash {
namespace {

void RequireSameShape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               Vector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "entry count does not match rows x cols");
  }
}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::Constant(std::size_t rows, std::size_t cols,
                                        const Rational& value) {
  return RationalMatrix(rows, cols, Vector(rows * cols, value));
}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::Diagonal(std::span<const Rational> diagonal) {
  RationalMatrix m(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

RationalMatrix RationalMatrix::Outer(std::span<const Rational> c,
                                     std::span<const Rational> d) {
  RationalMatrix m(c.size(), d.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) m(i, j) = c[i] * d[j];
  }
  return m;
}

Vector RationalMatrix::Row(std::size_t r) const {
  return Vector(entries_.begin() + r * cols_,
                entries_.begin() + (r + 1) * cols_);
}

Vector RationalMatrix::Column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& v) { return v.is_zero(); });
}

Rational RationalMatrix::MinEntry() const {
  if (entries_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  }
  return *std::min_element(entries_.begin(), entries_.end());
}

Rational RationalMatrix::MaxEntry() const {
  if (entries_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  }
  return *std::max_element(entries_.begin(), entries_.end());
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  RequireSameShape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += b.entries_[i];
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  RequireSameShape(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] -= b.entries_[i];
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out = m;
  for (auto& e : out.entries_) e *= s;
  return out;
}

Vector Multiply(const RationalMatrix& m, std::span<const Rational> z) {
  if (z.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "M z: length mismatch");
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!z[c].is_zero()) out[r] += m(r, c) * z[c];
    }
  }
  return out;
}

Vector LeftMultiply(std::span<const Rational> z, const RationalMatrix& m) {
  if (z.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "z^T M: length mismatch");
  }
  Vector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (z[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += z[r] * m(r, c);
  }
  return out;
}

Rational Bilinear(std::span<const Rational> u, const RationalMatrix& m,
                  std::span<const Rational> v) {
  return Dot(u, Multiply(m, v));
}

Rational Dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "dot: length mismatch");
  }
  Rational out;
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

Rational Sum(std::span<const Rational> v) {
  Rational out;
  for (const auto& x : v) out += x;
  return out;
}

Vector Scale(const Rational& s, std::span<const Rational> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

std::optional<LinearSolution> SolveLinearSystem(const RationalMatrix& m,
                                                std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "rhs length mismatch");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Augmented copy [M | rhs].
  RationalMatrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = rhs[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t found = pivot_row;
    while (found < rows && aug(found, c).is_zero()) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t k = 0; k <= cols; ++k) {
        std::swap(aug(found, k), aug(pivot_row, k));
      }
    }
    const Rational inv = aug(pivot_row, c).Reciprocal();
    for (std::size_t k = c; k <= cols; ++k) aug(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || aug(r, c).is_zero()) continue;
      const Rational factor = aug(r, c);
      for (std::size_t k = c; k <= cols; ++k) {
        aug(r, k) -= factor * aug(pivot_row, k);
      }
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (!aug(r, cols).is_zero()) return std::nullopt;
  }

  LinearSolution out;
  out.particular.assign(cols, Rational());
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.particular[pivot_cols[i]] = aug(i, cols);
  }
  out.nullity = cols - pivot_cols.size();
  return out;
}

std::string FormatVector(std::span<const Rational> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += v[i].ToString();
  }
  return out;
}

}  // namespace symnash
