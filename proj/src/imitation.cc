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

#include "symnash/imitation.h"

#include <utility>

#include "symnash/errors.h"
#include "symnash/verify.h"

namespace symnash {
namespace {

void RequirePositive(const RationalMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "imitation games need square A");
  }
  for (const auto& v : a.entries()) {
    if (v.sign() <= 0) {
      throw Error(ErrorCode::kNonPositiveMatrix,
                  "A has a nonpositive entry " + v.ToString());
    }
  }
}

}  // namespace

PositiveDiagonal::PositiveDiagonal(Vector entries)
    : entries_(std::move(entries)) {
  for (const auto& v : entries_) {
    if (v.sign() <= 0) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "diagonal entry " + v.ToString() + " is not positive");
    }
  }
}

PositiveDiagonal PositiveDiagonal::Identity(std::size_t n) {
  return PositiveDiagonal(Vector(n, Rational(1)));
}

MixedStrategy LiftToSymmetric(const RationalMatrix& a, const MixedStrategy& x,
                              const MixedStrategy& y) {
  RequirePositive(a);
  const BimatrixGame imitation(a, RationalMatrix::Identity(a.rows()));
  if (!IsNash(imitation, x, y).holds) {
    throw Error(ErrorCode::kNotAnEquilibrium,
                "(x, y) is not an equilibrium of (A, I)");
  }
  if (!IsSymmetricNe(a, y).holds) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "lifted y is not a symmetric equilibrium");
  }
  return y;
}

MixedStrategy RescaleForDiagonal(const MixedStrategy& x,
                                 const PositiveDiagonal& diag) {
  if (x.size() != diag.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "x and diagonal lengths");
  }
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] / diag.entries()[i];
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] / (s * diag.entries()[i]);
  }
  return MixedStrategy(std::move(out));
}

MixedStrategy WitnessForDiagonal(const RationalMatrix& a,
                                 const MixedStrategy& y,
                                 const PositiveDiagonal& diag) {
  RequirePositive(a);
  if (y.size() != a.rows() || diag.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "y, diagonal and A sizes");
  }
  if (!IsSymmetricNe(a, y).holds) {
    throw Error(ErrorCode::kNotAnEquilibrium,
                "y is not a symmetric equilibrium of (A, A^T)");
  }
  // Uniform weight on a non-maximal index would break the row player's
  // condition, so the support is the argmax set rather than all indices
  // with positive payoff.
  const auto best = Argmax(Multiply(a, y.weights()));
  Vector uniform(a.rows());
  for (std::size_t i : best) {
    uniform[i] = Rational(1, static_cast<long>(best.size()));
  }
  MixedStrategy x = RescaleForDiagonal(MixedStrategy(std::move(uniform)), diag);
  if (!IsNash(BimatrixGame(a, diag.ToMatrix()), x, y).holds) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "witness is not an equilibrium of (A, D)");
  }
  return x;
}

}  // namespace symnash
