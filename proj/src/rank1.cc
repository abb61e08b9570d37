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

#include "symnash/rank1.h"

#include <algorithm>
#include <utility>

#include "symnash/errors.h"
#include "symnash/verify.h"

namespace symnash {
namespace {

MixedStrategy StrategyPart(const Vector& solution, std::size_t n) {
  return MixedStrategy(Vector(solution.begin(),
                              solution.begin() + static_cast<long>(n)));
}

Vector WithZeroPi(std::span<const Rational> d) {
  Vector out(d.begin(), d.end());
  out.emplace_back();
  return out;
}

mpz_class Lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Smallest k with 2^k >= q (0 when q <= 1).
std::size_t CeilLog2(const Rational& q) {
  if (q <= 1) return 0;
  mpz_class c = q.Floor();
  if (Rational(c) != q) c += 1;
  c -= 1;
  return mpz_sizeinbase(c.get_mpz_t(), 2);
}

}  // namespace

bool Rank1Decomposition::IsRankZero() const {
  const auto zero = [](const Rational& v) { return v.is_zero(); };
  return std::all_of(c.begin(), c.end(), zero) ||
         std::all_of(d.begin(), d.end(), zero);
}

RationalMatrix Rank1Decomposition::Recompose(
    std::span<const Rational> v) const {
  return k + Rational(1, 2) * RationalMatrix::Outer(c, v);
}

Rank1Decomposition DecomposeRank1(const RationalMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "rank-1 solver needs square A");
  }
  const std::size_t n = a.rows();
  const RationalMatrix m = a + a.Transpose();
  Rank1Decomposition dec;
  if (m.IsZero()) {
    dec.k = a;
    dec.c.assign(n, Rational());
    dec.d.assign(n, Rational());
    return dec;
  }
  // A nonzero symmetric rank-1 matrix s v v^T has a nonzero diagonal entry.
  std::size_t pivot = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (!m(j, j).is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == n) {
    throw Error(ErrorCode::kRankExceedsOne,
                "A + A^T is nonzero with a zero diagonal");
  }
  dec.c = m.Column(pivot);
  dec.d = Scale(m(pivot, pivot).Reciprocal(), m.Row(pivot));
  if (RationalMatrix::Outer(dec.c, dec.d) != m) {
    throw Error(ErrorCode::kRankExceedsOne, "rank(A + A^T) >= 2");
  }
  dec.k = a - Rational(1, 2) * RationalMatrix::Outer(dec.c, dec.d);
  return dec;
}

LinearProgram BuildLpLambda(const Rank1Decomposition& dec,
                            const Rational& lambda) {
  const std::size_t n = dec.size();
  LinearProgram lp(n + 1);
  lp.sense = Sense::kMaximize;
  lp.bounds[n] = VarBound::kFree;
  const Rational half_lambda = lambda / 2;
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = half_lambda * dec.c[i];
  lp.objective[n] = -1;
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = dec.k.Row(i);
    row.push_back(-1);
    lp.AddInequality(std::move(row), -(dec.c[i] * half_lambda));
  }
  Vector total(n + 1, Rational(1));
  total[n] = 0;
  lp.AddEquality(std::move(total), 1);
  return lp;
}

LambdaInterval FInterval(const Rank1Decomposition& dec,
                         const Rational& lambda) {
  const std::size_t n = dec.size();
  const LinearProgram lp = BuildLpLambda(dec, lambda);
  const LpOutcome primary = Solve(lp);
  if (!primary.optimal() || !primary.objective_value.is_zero()) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "LP(lambda) optimum is not zero at lambda = " +
                    lambda.ToString());
  }
  const Vector secondary = WithZeroPi(dec.d);
  const LpOutcome low =
      OptimizeOverOptimalFace(lp, primary, secondary, Sense::kMinimize);
  const LpOutcome high =
      OptimizeOverOptimalFace(lp, primary, secondary, Sense::kMaximize);
  if (!low.optimal() || !high.optimal()) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "d.x is unbounded over a face of the simplex");
  }
  return LambdaInterval{low.objective_value, high.objective_value,
                        StrategyPart(low.solution, n),
                        StrategyPart(high.solution, n)};
}

std::optional<MixedStrategy> FixedPointWitness(const Rank1Decomposition& dec,
                                               const Rational& lambda) {
  LinearProgram lp = BuildLpLambda(dec, lambda);
  lp.AddEquality(WithZeroPi(dec.d), lambda);
  const LpOutcome out = Solve(lp);
  if (!out.optimal() || !out.objective_value.is_zero()) return std::nullopt;
  return StrategyPart(out.solution, dec.size());
}

mpz_class FixedPointDenominatorBound(const Rank1Decomposition& dec) {
  const std::size_t n = dec.size();
  // Clear denominators of every coefficient in the fixed-point system
  // (rows of K, c/2 and d).
  mpz_class common = 1;
  mpz_class d_lcm = 1;
  for (const auto& v : dec.k.entries()) common = Lcm(common, v.den());
  for (const auto& v : dec.c) common = Lcm(common, (v / 2).den());
  for (const auto& v : dec.d) {
    common = Lcm(common, v.den());
    d_lcm = Lcm(d_lcm, v.den());
  }
  mpz_class magnitude = common;
  const auto track = [&](const Rational& v) {
    const Rational scaled = (v * Rational(common)).Abs();
    if (scaled.num() > magnitude) magnitude = scaled.num();
  };
  for (const auto& v : dec.k.entries()) track(v);
  for (const auto& v : dec.c) track(v / 2);
  for (const auto& v : dec.d) track(v);

  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), n + 2);
  mpz_class power;
  const mpz_class base = magnitude + 1;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n + 2);
  return factorial * power * d_lcm;
}

Rank1Solution SolveSymmetricRank1(const RationalMatrix& a) {
  const Rank1Decomposition dec = DecomposeRank1(a);
  const Rational d_min = *std::min_element(dec.d.begin(), dec.d.end());
  const Rational d_max = *std::max_element(dec.d.begin(), dec.d.end());

  const auto finish = [&](MixedStrategy x, const Rational& lambda,
                          std::size_t iterations, bool reconstructed) {
    if (!IsSymmetricNe(a, x).holds || Dot(dec.d, x.weights()) != lambda) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "fixed-point witness is not a symmetric equilibrium");
    }
    return Rank1Solution{std::move(x), lambda, iterations, reconstructed};
  };

  // Rank-0 or constant d: every simplex point has d.x = d_min.
  if (dec.IsRankZero() || d_min == d_max) {
    auto x = FixedPointWitness(dec, d_min);
    if (!x) {
      throw Error(ErrorCode::kFixedPointNotFound,
                  "no optimal point of LP(" + d_min.ToString() + ")");
    }
    return finish(*std::move(x), d_min, 0, false);
  }

  Rational lo = d_min;
  Rational hi = d_max;
  if (FInterval(dec, lo).Contains(lo)) {
    return finish(*FixedPointWitness(dec, lo), lo, 0, false);
  }
  if (FInterval(dec, hi).Contains(hi)) {
    return finish(*FixedPointWitness(dec, hi), hi, 0, false);
  }

  // Invariant: F_hi(lo) >= lo and F_hi(hi) <= hi, so the closed bracket
  // holds a fixed point. Fixed points have denominators <= N, and two such
  // rationals are at least 1/N^2 apart.
  const mpz_class bound = FixedPointDenominatorBound(dec);
  const Rational target_width =
      Rational(mpz_class(1), mpz_class(2 * bound * bound));
  const std::size_t max_iterations =
      CeilLog2((hi - lo) / target_width) + 4;

  std::size_t iterations = 0;
  while (hi - lo >= target_width) {
    if (iterations >= max_iterations) {
      throw Error(ErrorCode::kFixedPointNotFound,
                  "binary search exceeded its iteration cap");
    }
    ++iterations;
    const Rational mid = (lo + hi) / 2;
    const LambdaInterval f = FInterval(dec, mid);
    if (f.Contains(mid)) {
      auto x = FixedPointWitness(dec, mid);
      if (!x) {
        throw Error(ErrorCode::kInternalInvariantViolation,
                    "mid lies in F(mid) but has no witness");
      }
      return finish(*std::move(x), mid, iterations, false);
    }
    if (f.hi < mid) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  const Rational candidate = SimplestInInterval(lo, hi);
  if (candidate.den() > bound || !FInterval(dec, candidate).Contains(candidate)) {
    throw Error(ErrorCode::kFixedPointNotFound,
                "reconstructed " + candidate.ToString() +
                    " is not a fixed point");
  }
  auto x = FixedPointWitness(dec, candidate);
  if (!x) {
    throw Error(ErrorCode::kFixedPointNotFound,
                "no witness at reconstructed fixed point");
  }
  return finish(*std::move(x), candidate, iterations, true);
}

bool WitnessIsSymmetricNe(const Rank1Decomposition& dec,
                          const Rational& lambda, const MixedStrategy& x,
                          std::span<const Rational> v) {
  if (v.size() != x.size() || Dot(v, x.weights()) != lambda) {
    throw Error(ErrorCode::kPreconditionViolated, "v.x != lambda");
  }
  return IsSymmetricNe(dec.Recompose(v), x).holds;
}

}  // namespace symnash
