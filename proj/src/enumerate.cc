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

#include "symnash/enumerate.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "symnash/errors.h"
#include "symnash/lp.h"
#include "symnash/verify.h"

namespace symnash {
namespace {

using Subset = std::uint32_t;

std::vector<std::size_t> Members(Subset s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (s & (Subset{1} << i)) out.push_back(i);
  }
  return out;
}

// Nonempty subsets of {0..n-1}, by size and then lexicographically by
// member list.
std::vector<std::vector<std::size_t>> OrderedSupports(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (Subset s = 1; s < (Subset{1} << n); ++s) out.push_back(Members(s, n));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.size(), std::cref(a)) <
           std::make_tuple(b.size(), std::cref(b));
  });
  return out;
}

enum class PartKind { kNone, kPoint, kContinuum };

struct PartResult {
  PartKind kind = PartKind::kNone;
  Vector z;
  // The equality system was singular even though the solution is unique.
  bool singular = false;
};

// Polytope of opponent mixtures z supported on `support` such that the
// payoff vector M z is maximal exactly-or-more on `tight_rows`:
//   z >= 0, z_j = 0 off support, sum z = 1,
//   (M z)_i = pi for i in tight_rows, (M z)_i <= pi otherwise.
// Variables are (z_support..., pi).
LinearProgram PartPolytope(const RationalMatrix& m,
                           const std::vector<std::size_t>& tight_rows,
                           const std::vector<std::size_t>& support,
                           std::size_t extra_vars) {
  const std::size_t k = support.size();
  LinearProgram lp(k + 1 + extra_vars);
  lp.bounds[k] = VarBound::kFree;
  std::vector<bool> tight(m.rows(), false);
  for (std::size_t i : tight_rows) tight[i] = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row(lp.num_vars());
    for (std::size_t s = 0; s < k; ++s) row[s] = m(i, support[s]);
    row[k] = -1;
    if (tight[i]) {
      lp.AddEquality(std::move(row), 0);
    } else {
      lp.AddInequality(std::move(row), 0);
    }
  }
  Vector total(lp.num_vars());
  for (std::size_t s = 0; s < k; ++s) total[s] = 1;
  lp.AddEquality(std::move(total), 1);
  return lp;
}

// Sequentially fixes z_0, z_1, ... at their minimum (or maximum).
Vector LexExtreme(LinearProgram lp, std::size_t k, Sense sense) {
  lp.sense = sense;
  Vector z(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::fill(lp.objective.begin(), lp.objective.end(), Rational());
    lp.objective[s] = 1;
    const LpOutcome out = Solve(lp);
    if (!out.optimal()) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "lexicographic extreme of a nonempty polytope failed");
    }
    z[s] = out.solution[s];
    Vector fix(lp.num_vars());
    fix[s] = 1;
    lp.AddEquality(std::move(fix), z[s]);
  }
  return z;
}

Vector Embed(const Vector& compact, const std::vector<std::size_t>& support,
             std::size_t n) {
  Vector z(n);
  for (std::size_t s = 0; s < support.size(); ++s) z[support[s]] = compact[s];
  return z;
}

PartResult SolvePart(const RationalMatrix& m,
                     const std::vector<std::size_t>& tight_rows,
                     const std::vector<std::size_t>& support) {
  const std::size_t k = support.size();
  // Equalities only: (M z)_i - pi = 0 on tight rows, sum z = 1.
  RationalMatrix system(tight_rows.size() + 1, k + 1);
  Vector rhs(tight_rows.size() + 1);
  for (std::size_t r = 0; r < tight_rows.size(); ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      system(r, s) = m(tight_rows[r], support[s]);
    }
    system(r, k) = -1;
  }
  for (std::size_t s = 0; s < k; ++s) system(tight_rows.size(), s) = 1;
  rhs.back() = 1;

  const auto solved = SolveLinearSystem(system, rhs);
  if (!solved) return {};

  PartResult result;
  if (solved->unique()) {
    const Vector& sol = solved->particular;
    for (std::size_t s = 0; s < k; ++s) {
      if (sol[s].sign() <= 0) return {};
    }
    const Rational& pi = sol[k];
    Vector z = Embed(sol, support, m.cols());
    const Vector payoffs = Multiply(m, z);
    for (const auto& p : payoffs) {
      if (p > pi) return {};
    }
    result.kind = PartKind::kPoint;
    result.z = std::move(z);
    return result;
  }

  // Singular system: is there a point with the exact support? Maximize a
  // common lower bound t on the supported weights.
  LinearProgram margin = PartPolytope(m, tight_rows, support, 1);
  const std::size_t t = k + 1;
  margin.objective[t] = 1;
  for (std::size_t s = 0; s < k; ++s) {
    Vector row(margin.num_vars());
    row[s] = -1;
    row[t] = 1;
    margin.AddInequality(std::move(row), 0);
  }
  {
    Vector cap(margin.num_vars());
    cap[t] = 1;
    margin.AddInequality(std::move(cap), 1);
  }
  const LpOutcome best = Solve(margin);
  if (!best.optimal() || best.objective_value.sign() <= 0) return {};

  const LinearProgram closure = PartPolytope(m, tight_rows, support, 0);
  const Vector lo = LexExtreme(closure, k, Sense::kMinimize);
  const Vector hi = LexExtreme(closure, k, Sense::kMaximize);
  result.singular = true;
  result.kind = lo == hi ? PartKind::kPoint : PartKind::kContinuum;
  result.z = Embed(lo, support, m.cols());
  return result;
}

bool TooManyBestResponses(std::span<const Rational> payoffs,
                          const MixedStrategy& strategy) {
  return Argmax(payoffs).size() > strategy.Support().size();
}

}  // namespace

EnumerationResult EnumerateNe(const BimatrixGame& game, std::size_t bound) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  if (m > bound || n > bound) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(m) + "x" + std::to_string(n) +
                    " exceeds enumeration bound " + std::to_string(bound));
  }
  const RationalMatrix bt = game.b().Transpose();
  const auto rows = OrderedSupports(m);
  const auto cols = OrderedSupports(n);
  std::vector<std::pair<const std::vector<std::size_t>*,
                        const std::vector<std::size_t>*>>
      pairs;
  for (const auto& s1 : rows) {
    for (const auto& s2 : cols) pairs.emplace_back(&s1, &s2);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a,
                                                  const auto& b) {
    return a.first->size() + a.second->size() <
           b.first->size() + b.second->size();
  });

  EnumerationResult result;
  std::set<Profile> found;
  for (const auto& [s1, s2] : pairs) {
    const PartResult y = SolvePart(game.a(), *s1, *s2);
    if (y.kind == PartKind::kNone) continue;
    const PartResult x = SolvePart(bt, *s2, *s1);
    if (x.kind == PartKind::kNone) continue;

    Profile profile{MixedStrategy(x.z), MixedStrategy(y.z)};
    if (!IsNash(game, profile.x, profile.y).holds) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "support enumeration produced a non-equilibrium");
    }
    if (x.kind == PartKind::kContinuum || y.kind == PartKind::kContinuum) {
      result.continuum = true;
      result.degenerate = true;
    }
    if (x.singular || y.singular ||
        TooManyBestResponses(Multiply(game.a(), profile.y.weights()),
                             profile.y) ||
        TooManyBestResponses(LeftMultiply(profile.x.weights(), game.b()),
                             profile.x)) {
      result.degenerate = true;
    }
    found.insert(std::move(profile));
  }
  result.equilibria.assign(found.begin(), found.end());
  return result;
}

SymmetricEnumerationResult EnumerateSymmetricNe(const RationalMatrix& a,
                                                std::size_t bound) {
  if (!a.is_square() || a.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "symmetric game needs square A");
  }
  if (a.rows() > bound) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(a.rows()) + " exceeds enumeration bound " +
                    std::to_string(bound));
  }
  SymmetricEnumerationResult result;
  std::set<MixedStrategy> found;
  for (const auto& support : OrderedSupports(a.rows())) {
    const PartResult part = SolvePart(a, support, support);
    if (part.kind == PartKind::kNone) continue;
    MixedStrategy x(part.z);
    if (!IsSymmetricNe(a, x).holds) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "support enumeration produced a non-equilibrium");
    }
    if (part.kind == PartKind::kContinuum) {
      result.continuum = true;
      result.degenerate = true;
    }
    if (part.singular ||
        TooManyBestResponses(Multiply(a, x.weights()), x)) {
      result.degenerate = true;
    }
    found.insert(std::move(x));
  }
  result.equilibria.assign(found.begin(), found.end());
  return result;
}

NonsymmetricCount CountNonsymmetricNe(const RationalMatrix& a,
                                      std::size_t bound) {
  const SymmetricGame game(a);
  const EnumerationResult all = EnumerateNe(game.AsBimatrix(), bound);
  NonsymmetricCount out;
  out.degenerate = all.degenerate;
  out.continuum = all.continuum;
  for (const auto& p : all.equilibria) {
    if (p.x != p.y) out.profiles.push_back(p);
  }
  out.count = out.profiles.size();
  return out;
}

}  // namespace symnash
