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

#include "symnash/lp.h"

#include <optional>
#include <string>
#include <utility>

#include "symnash/errors.h"

namespace symnash {
namespace {

// Equality-form tableau  T z = b, z >= 0  kept in canonical form with
// respect to `basis`. Columns at or beyond `first_artificial` are phase-one
// artificials.
class Tableau {
 public:
  Tableau(std::vector<Vector> rows, Vector rhs, std::size_t num_cols)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), num_cols_(num_cols) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return num_cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  // Maximizes cost . z restricted to columns < active_cols, starting from the
  // current (feasible) basis. Returns false when unbounded.
  bool Maximize(const Vector& cost, std::size_t active_cols) {
    Vector reduced = cost;
    reduced.resize(num_cols_);
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational cb = cost_of(cost, basis_[r]);
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c < num_cols_; ++c) {
        if (!rows_[r][c].is_zero()) reduced[c] -= cb * rows_[r][c];
      }
    }
    while (true) {
      // Bland: lowest-index improving column enters.
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (reduced[c].sign() > 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t col = *entering;

      // Bland: among minimum ratios, lowest basic index leaves.
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (rows_[r][col].sign() <= 0) continue;
        const Rational ratio = rhs_[r] / rows_[r][col];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, col);
      const Rational factor = reduced[col];
      for (std::size_t c = 0; c < num_cols_; ++c) {
        if (!rows_[*leaving][c].is_zero()) {
          reduced[c] -= factor * rows_[*leaving][c];
        }
      }
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = rows_[row][col].Reciprocal();
    for (auto& v : rows_[row]) {
      if (!v.is_zero()) v *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < num_rows(); ++r) {
      if (r == row || rows_[r][col].is_zero()) continue;
      const Rational factor = rows_[r][col];
      for (std::size_t c = 0; c < num_cols_; ++c) {
        if (!rows_[row][c].is_zero()) rows_[r][c] -= factor * rows_[row][c];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  void DropRow(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  Vector Values() const {
    Vector z(num_cols_);
    for (std::size_t r = 0; r < num_rows(); ++r) z[basis_[r]] = rhs_[r];
    return z;
  }

 private:
  static Rational cost_of(const Vector& cost, std::size_t c) {
    return c < cost.size() ? cost[c] : Rational();
  }

  std::vector<Vector> rows_;
  Vector rhs_;
  std::size_t num_cols_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::AddInequality(Vector coeffs, Rational rhs) {
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearProgram::AddEquality(Vector coeffs, Rational rhs) {
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearProgram::Validate() const {
  if (num_vars() == 0) {
    throw Error(ErrorCode::kMalformedProgram, "no variables");
  }
  if (bounds.size() != num_vars()) {
    throw Error(ErrorCode::kMalformedProgram, "bounds length mismatch");
  }
  for (const auto* group : {&inequalities, &equalities}) {
    for (const auto& row : *group) {
      if (row.coeffs.size() != num_vars()) {
        throw Error(ErrorCode::kMalformedProgram,
                    "constraint has " + std::to_string(row.coeffs.size()) +
                        " coefficients, expected " +
                        std::to_string(num_vars()));
      }
    }
  }
}

bool LinearProgram::IsFeasible(std::span<const Rational> x) const {
  if (x.size() != num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (bounds[j] == VarBound::kNonnegative && x[j].sign() < 0) return false;
  }
  for (const auto& row : inequalities) {
    if (Dot(row.coeffs, x) > row.rhs) return false;
  }
  for (const auto& row : equalities) {
    if (Dot(row.coeffs, x) != row.rhs) return false;
  }
  return true;
}

Rational LinearProgram::Evaluate(std::span<const Rational> x) const {
  return Dot(objective, x);
}

LpOutcome Solve(const LinearProgram& lp) {
  lp.Validate();
  const std::size_t n = lp.num_vars();

  // Column layout: structural columns (free variables split into +/-),
  // then one slack per inequality, then artificials.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::optional<std::size_t>> neg_col(n);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (lp.bounds[j] == VarBound::kFree) neg_col[j] = cols++;
  }
  const std::size_t first_slack = cols;
  cols += lp.inequalities.size();
  const std::size_t first_artificial = cols;

  struct RowSpec {
    const LinearConstraint* constraint;
    std::optional<std::size_t> slack;
  };
  std::vector<RowSpec> specs;
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    specs.push_back({&lp.inequalities[i], first_slack + i});
  }
  for (const auto& eq : lp.equalities) specs.push_back({&eq, std::nullopt});

  const std::size_t m = specs.size();
  std::vector<Vector> rows(m);
  Vector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t num_artificial = 0;
  std::vector<bool> needs_artificial(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = specs[r].constraint->rhs.sign() < 0;
    needs_artificial[r] = flip || !specs[r].slack.has_value();
    if (needs_artificial[r]) ++num_artificial;
  }
  const std::size_t total_cols = first_artificial + num_artificial;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const LinearConstraint& c = *specs[r].constraint;
    const bool flip = c.rhs.sign() < 0;
    Vector row(total_cols);
    for (std::size_t j = 0; j < n; ++j) {
      row[pos_col[j]] = c.coeffs[j];
      if (neg_col[j]) row[*neg_col[j]] = -c.coeffs[j];
    }
    if (specs[r].slack) row[*specs[r].slack] = 1;
    rhs[r] = c.rhs;
    if (flip) {
      for (auto& v : row) v = -v;
      rhs[r] = -rhs[r];
    }
    if (needs_artificial[r]) {
      row[next_artificial] = 1;
      basis[r] = next_artificial++;
    } else {
      basis[r] = *specs[r].slack;
    }
    rows[r] = std::move(row);
  }

  Tableau tableau(std::move(rows), std::move(rhs), total_cols);
  tableau.basis() = std::move(basis);

  if (num_artificial > 0) {
    Vector phase_one(total_cols);
    for (std::size_t c = first_artificial; c < total_cols; ++c) phase_one[c] = -1;
    tableau.Maximize(phase_one, total_cols);
    for (std::size_t r = 0; r < tableau.num_rows(); ++r) {
      if (tableau.basis()[r] >= first_artificial &&
          tableau.rhs(r).sign() != 0) {
        return LpOutcome{LpStatus::kInfeasible, {}, {}};
      }
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linearly dependent and dropped.
    for (std::size_t r = 0; r < tableau.num_rows();) {
      if (tableau.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (!tableau.at(r, c).is_zero()) {
          col = c;
          break;
        }
      }
      if (col) {
        tableau.Pivot(r, *col);
        ++r;
      } else {
        tableau.DropRow(r);
      }
    }
  }

  Vector cost(total_cols);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c =
        lp.sense == Sense::kMaximize ? lp.objective[j] : -lp.objective[j];
    cost[pos_col[j]] = c;
    if (neg_col[j]) cost[*neg_col[j]] = -c;
  }
  if (!tableau.Maximize(cost, first_artificial)) {
    return LpOutcome{LpStatus::kUnbounded, {}, {}};
  }

  const Vector z = tableau.Values();
  Vector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = z[pos_col[j]];
    if (neg_col[j]) x[j] -= z[*neg_col[j]];
  }
  LpOutcome out;
  out.status = LpStatus::kOptimal;
  out.objective_value = lp.Evaluate(x);
  out.solution = std::move(x);
  return out;
}

LpOutcome OptimizeOverOptimalFace(const LinearProgram& lp,
                                  std::span<const Rational> secondary,
                                  Sense sense) {
  return OptimizeOverOptimalFace(lp, Solve(lp), secondary, sense);
}

LpOutcome OptimizeOverOptimalFace(const LinearProgram& lp,
                                  const LpOutcome& primary,
                                  std::span<const Rational> secondary,
                                  Sense sense) {
  if (!primary.optimal()) {
    throw Error(ErrorCode::kPrimaryNotOptimal,
                "primary program has no optimal solution");
  }
  if (secondary.size() != lp.num_vars()) {
    throw Error(ErrorCode::kMalformedProgram,
                "secondary objective length mismatch");
  }
  LinearProgram face = lp;
  face.AddEquality(lp.objective, primary.objective_value);
  face.objective.assign(secondary.begin(), secondary.end());
  face.sense = sense;
  return Solve(face);
}

}  // namespace symnash
