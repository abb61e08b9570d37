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

#ifndef SYMNASH_IMITATION_H_
#define SYMNASH_IMITATION_H_

#include <span>

#include "symnash/game.h"
#include "symnash/matrix.h"

namespace symnash {

// Diagonal matrix with strictly positive entries.
class PositiveDiagonal {
 public:
  explicit PositiveDiagonal(Vector entries);
  static PositiveDiagonal Identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  const Vector& entries() const { return entries_; }
  RationalMatrix ToMatrix() const { return RationalMatrix::Diagonal(entries_); }

 private:
  Vector entries_;
};

// If (x, y) is an equilibrium of the imitation game (A, I) with A positive,
// (y, y) is a symmetric equilibrium of (A, A^T); returns y after checking
// both facts.
MixedStrategy LiftToSymmetric(const RationalMatrix& a, const MixedStrategy& x,
                              const MixedStrategy& y);

// x'_i = x_i / (s d_i) with s = sum_i x_i / d_i. Turns an equilibrium (x, y)
// of (A, I) into an equilibrium (x', y) of (A, diag).
MixedStrategy RescaleForDiagonal(const MixedStrategy& x,
                                 const PositiveDiagonal& diag);

// For a symmetric equilibrium y of (A, A^T), a row strategy x with (x, y) an
// equilibrium of (A, diag): uniform on argmax_i (A y)_i, then rescaled.
MixedStrategy WitnessForDiagonal(const RationalMatrix& a,
                                 const MixedStrategy& y,
                                 const PositiveDiagonal& diag);

}  // namespace symnash

#endif  // SYMNASH_IMITATION_H_
