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

#ifndef SYMNASH_LP_H_
#define SYMNASH_LP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "symnash/matrix.h"
#include "symnash/rational.h"

namespace symnash {

enum class Sense { kMaximize, kMinimize };
enum class VarBound { kNonnegative, kFree };

struct LinearConstraint {
  Vector coeffs;
  Rational rhs;
};

// optimize objective . x
//   subject to  inequalities: coeffs . x <= rhs
//               equalities:   coeffs . x == rhs
//               x_j >= 0 unless bounds[j] is kFree.
struct LinearProgram {
  Sense sense = Sense::kMaximize;
  Vector objective;
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equalities;
  std::vector<VarBound> bounds;

  explicit LinearProgram(std::size_t num_vars = 0)
      : objective(num_vars), bounds(num_vars, VarBound::kNonnegative) {}

  std::size_t num_vars() const { return objective.size(); }
  void AddInequality(Vector coeffs, Rational rhs);
  void AddEquality(Vector coeffs, Rational rhs);

  // Throws MalformedProgram on inconsistent dimensions or zero variables.
  void Validate() const;
  // Exact check of every constraint and bound.
  bool IsFeasible(std::span<const Rational> x) const;
  Rational Evaluate(std::span<const Rational> x) const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Vector solution;          // set when kOptimal
  Rational objective_value;  // set when kOptimal

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Two-phase dense-tableau simplex with Bland's rule. Optimal solutions are
// basic feasible solutions.
LpOutcome Solve(const LinearProgram& lp);

// Optimizes `secondary` over the optimal face of `lp`, i.e. subject to lp's
// constraints plus objective . x == v*. Throws PrimaryNotOptimal when lp has
// no optimum.
LpOutcome OptimizeOverOptimalFace(const LinearProgram& lp,
                                  std::span<const Rational> secondary,
                                  Sense sense);
// Same, reusing an already computed primary outcome.
LpOutcome OptimizeOverOptimalFace(const LinearProgram& lp,
                                  const LpOutcome& primary,
                                  std::span<const Rational> secondary,
                                  Sense sense);

}  // namespace symnash

#endif  // SYMNASH_LP_H_
