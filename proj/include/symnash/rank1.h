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

#ifndef SYMNASH_RANK1_H_
#define SYMNASH_RANK1_H_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>

#include "symnash/game.h"
#include "symnash/lp.h"
#include "symnash/matrix.h"
#include "symnash/rational.h"

namespace symnash {

// A = K + (1/2) c d^T with K skew-symmetric and c d^T = A + A^T.
struct Rank1Decomposition {
  RationalMatrix k;
  Vector c;
  Vector d;

  std::size_t size() const { return c.size(); }
  bool IsRankZero() const;
  // K + (1/2) c v^T.
  RationalMatrix Recompose(std::span<const Rational> v) const;
};

// Throws RankExceedsOne when A + A^T is not of the form c d^T.
Rank1Decomposition DecomposeRank1(const RationalMatrix& a);

// The parameterized program for fixed lambda. Variables are x_0..x_{n-1}
// (nonnegative) followed by pi (free):
//   max  (1/2) lambda c.x - pi
//   s.t. K x + (c/2) lambda <= pi 1,  sum x = 1.
LinearProgram BuildLpLambda(const Rank1Decomposition& dec,
                            const Rational& lambda);

// [min, max] of d.x over the optimal solutions of LP(lambda).
struct LambdaInterval {
  Rational lo;
  Rational hi;
  MixedStrategy witness_lo;
  MixedStrategy witness_hi;

  bool Contains(const Rational& v) const { return lo <= v && v <= hi; }
};

// Throws InternalInvariantViolation if LP(lambda)'s optimum is not zero.
LambdaInterval FInterval(const Rank1Decomposition& dec,
                         const Rational& lambda);

// An optimal point of LP(lambda) with d.x == lambda, if one exists.
std::optional<MixedStrategy> FixedPointWitness(const Rank1Decomposition& dec,
                                               const Rational& lambda);

// Bound on the denominator of any fixed point of lambda -> F(lambda).
mpz_class FixedPointDenominatorBound(const Rank1Decomposition& dec);

struct Rank1Solution {
  MixedStrategy x;
  Rational fixed_point;  // lambda* = d.x
  std::size_t iterations = 0;
  bool reconstructed = false;  // found by continued-fraction reconstruction
};

// Symmetric equilibrium of (A, A^T) for rank(A + A^T) <= 1.
Rank1Solution SolveSymmetricRank1(const RationalMatrix& a);

// Whether x is a symmetric equilibrium of K + (1/2) c v^T. Requires
// v.x == lambda (PreconditionViolated otherwise); always true when x is an
// optimal point of LP(lambda).
bool WitnessIsSymmetricNe(const Rank1Decomposition& dec,
                          const Rational& lambda, const MixedStrategy& x,
                          std::span<const Rational> v);

}  // namespace symnash

#endif  // SYMNASH_RANK1_H_
