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

// Acceptance suite: one PASS/FAIL line per criterion, with pinned time
// limits. All comparisons are exact; there are no numeric tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.h"
#include "symnash/enumerate.h"
#include "symnash/errors.h"
#include "symnash/game.h"
#include "symnash/imitation.h"
#include "symnash/lp.h"
#include "symnash/rank1.h"
#include "symnash/reduction.h"
#include "symnash/verify.h"
#include "test_util.h"

namespace symnash {
namespace {

using ::symnash::testing::Generator;
using ::symnash::testing::Q;
using ::symnash::testing::RandomRank1;
using ::symnash::testing::Rank1Instance;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message while letting checks continue.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition && ok_) {
      ok_ = false;
      first_failure_ = what;
    }
    ++checks_;
  }
  Outcome Finish(const std::string& summary) const {
    return {ok_, ok_ ? summary : summary + "; first failure: " + first_failure_};
  }
  long checks() const { return checks_; }

 private:
  bool ok_ = true;
  long checks_ = 0;
  std::string first_failure_;
};

std::string Str(const MixedStrategy& s) { return FormatVector(s.weights()); }

BimatrixGame Pennies() {
  return BimatrixGame({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
}
BimatrixGame Coordination() {
  return BimatrixGame(RationalMatrix::Identity(2), RationalMatrix::Identity(2));
}
BimatrixGame BattleOfSexes() {
  return BimatrixGame({{2, 0}, {0, 1}}, {{1, 0}, {0, 2}});
}

// ---------------------------------------------------------------------------

Outcome BaseGameUniqueSymmetricEquilibrium() {
  const SymmetricEnumerationResult r = EnumerateSymmetricNe(BaseMatrix());
  Checker check;
  check.Expect(r.equilibria.size() == 1, "expected exactly one equilibrium");
  check.Expect(!r.equilibria.empty() &&
                   r.equilibria[0] == MixedStrategy({Q("2/7"), Q("3/7"), Q("2/7")}),
               "equilibrium differs from (2/7, 3/7, 2/7)");
  std::string found;
  for (const auto& s : r.equilibria) found += "(" + Str(s) + ")";
  return check.Finish("found " + found);
}

Outcome PerturbedBaseGameSweep() {
  Generator gen(20261);
  Checker check;
  const auto draw = [&] { return Rational(mpz_class(gen.Int(1, 1000)), mpz_class(10000)); };
  for (int i = 0; i < 50; ++i) {
    const EpsilonQuad q{draw(), draw(), draw(), draw()};
    const BimatrixGame game(DEps(q.eps1, q.eps2),
                            DEps(q.eps1_prime, q.eps2_prime).Transpose());
    const EnumerationResult oracle = EnumerateNe(game);
    check.Expect(oracle.equilibria.size() == 1, "quad " + std::to_string(i) +
                                                    ": not exactly one NE");
    if (oracle.equilibria.size() != 1) continue;
    const Profile& p = oracle.equilibria[0];
    check.Expect(p.x.Support().size() == 3 && p.y.Support().size() == 3,
                 "quad " + std::to_string(i) + ": not full support");
    const auto [v, w] = SolveDEps(q);
    check.Expect(p.x == v && p.y == w,
                 "quad " + std::to_string(i) + ": closed form differs");
  }
  return check.Finish("50 quads in (0, 1/10]^4, unique full-support NE");
}

Outcome CollapsePayoffIdentity() {
  Generator gen(20262);
  Checker check;
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = 2, n = i % 2 == 0 ? 2 : 3;
    const ReductionBundle bundle = BuildComposite(
        BimatrixGame(gen.IntMatrix(m, n, -9, 9), gen.IntMatrix(m, n, -9, 9)));
    // Random simplex points with every block nonzero.
    const auto draw = [&] {
      while (true) {
        const MixedStrategy z = gen.Simplex(1 + m + n);
        const BlockStrategy b = bundle.Split(z);
        if (Sum(b.a).sign() > 0 && Sum(b.b).sign() > 0 && z[0].sign() > 0) {
          return z;
        }
      }
    };
    const MixedStrategy x = draw(), y = draw();
    const BlockStrategy bx = bundle.Split(x), by = bundle.Split(y);
    const EpsilonQuad q = Epsilons(bx.a, bx.b, by.a, by.b, bundle.source);
    const auto cx = Collapse(bx), cy = Collapse(by);
    const Rational r1 = Bilinear(x.weights(), bundle.g, y.weights()) -
                        Bilinear(cx, DEps(q.eps1, q.eps2), cy);
    const Rational r2 =
        Bilinear(x.weights(), bundle.g.Transpose(), y.weights()) -
        Bilinear(cx, DEps(q.eps1_prime, q.eps2_prime).Transpose(), cy);
    check.Expect(r1.is_zero() && r2.is_zero(),
                 "pair " + std::to_string(i) + ": residual " + r1.ToString() +
                     ", " + r2.ToString());
  }
  return check.Finish("200 pairs on 2x2 and 2x3 sources, residuals 0");
}

Outcome NonsymmetricExistence() {
  Checker check;
  const NonsymmetricCount pennies = CountNonsymmetricNe(BuildComposite(Pennies()).g);
  const NonsymmetricCount coord =
      CountNonsymmetricNe(BuildComposite(Coordination()).g);
  check.Expect(pennies.count == 0, "matching pennies composite");
  check.Expect(coord.count >= 1, "coordination composite");
  return check.Finish("pennies: " + std::to_string(pennies.count) +
                      ", coordination: " + std::to_string(coord.count));
}

struct Source {
  std::string label;
  BimatrixGame game;
};

// Named sources plus seeded random 2x2 games; nondegenerate ones for k = 1
// and k = 3, and tie-degenerate ones with exactly two isolated equilibria
// for k = 2 (a nondegenerate game always has an odd number).
std::vector<Source> CountingCorpus() {
  std::vector<Source> corpus = {
      {"matching pennies", Pennies()},
      {"coordination", Coordination()},
      {"battle of the sexes", BattleOfSexes()},
      {"prisoners dilemma", BimatrixGame({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}})},
      {"two pure (ties)", BimatrixGame({{1, 0}, {0, 0}}, {{1, 0}, {0, 0}})},
  };
  Generator gen(20265);
  int k1 = 0, k3 = 0, k2 = 0;
  while (k1 < 3 || k3 < 3) {
    const BimatrixGame g(gen.IntMatrix(2, 2, -9, 9), gen.IntMatrix(2, 2, -9, 9));
    const EnumerationResult r = EnumerateNe(g);
    if (r.degenerate) continue;
    if (r.equilibria.size() == 1 && k1 < 3) {
      corpus.push_back({"random k=1 #" + std::to_string(++k1), g});
    } else if (r.equilibria.size() == 3 && k3 < 3) {
      corpus.push_back({"random k=3 #" + std::to_string(++k3), g});
    }
  }
  while (k2 < 2) {
    const BimatrixGame g(gen.IntMatrix(2, 2, 0, 2), gen.IntMatrix(2, 2, 0, 2));
    const EnumerationResult r = EnumerateNe(g);
    if (r.continuum || r.equilibria.size() != 2) continue;
    if (CountNonsymmetricNe(BuildComposite(g).g).continuum) continue;
    corpus.push_back({"random k=2 (ties) #" + std::to_string(++k2), g});
  }
  return corpus;
}

Outcome CountingCorrespondence(const std::vector<Source>& corpus) {
  Checker check;
  std::set<std::size_t> ks;
  int nondegenerate_k2 = 0;
  for (const Source& s : corpus) {
    const ReductionBundle bundle = BuildComposite(s.game);
    const EnumerationResult source = EnumerateNe(bundle.source);
    const NonsymmetricCount composite = CountNonsymmetricNe(bundle.g);
    const std::size_t k = source.equilibria.size();
    ks.insert(k);
    if (k == 2 && !source.degenerate) ++nondegenerate_k2;
    check.Expect(!source.continuum && !composite.continuum,
                 s.label + ": continuum");
    check.Expect(composite.count == k * (k - 1),
                 s.label + ": count " + std::to_string(composite.count) +
                     " != k(k-1) with k=" + std::to_string(k));
    std::set<Profile> images;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        images.insert(BackwardMap(bundle, source.equilibria[i],
                                  source.equilibria[j]));
      }
    }
    const std::set<Profile> enumerated(composite.profiles.begin(),
                                       composite.profiles.end());
    check.Expect(images.size() == k * (k - 1) && images == enumerated,
                 s.label + ": backward images do not match the enumeration");
    const CountingReport report = CheckCountingCorrespondence(s.game);
    check.Expect(report.holds, s.label + ": report does not hold");
  }
  check.Expect(ks == std::set<std::size_t>{1, 2, 3}, "k values not covered");
  std::ostringstream summary;
  summary << corpus.size() << " sources, k in {1,2,3}; nondegenerate "
          << "sources cover k=1,3 and k=2 comes from tie-degenerate sources "
          << "with isolated equilibria (" << nondegenerate_k2
          << " nondegenerate k=2 sources: their NE count is always odd)";
  return check.Finish(summary.str());
}

Outcome RoundTrips(const std::vector<Source>& corpus) {
  Checker check;
  long pairs = 0, composites = 0;
  for (const Source& s : corpus) {
    const ReductionBundle bundle = BuildComposite(s.game);
    const EnumerationResult source = EnumerateNe(bundle.source);
    for (const Profile& p : source.equilibria) {
      for (const Profile& q : source.equilibria) {
        if (p == q) continue;
        const Profile image = BackwardMap(bundle, p, q);
        const auto [p2, q2] = ForwardMap(bundle, image.x, image.y);
        check.Expect(p2 == p && q2 == q, s.label + ": forward(backward) differs");
        ++pairs;
      }
    }
    for (const Profile& z : CountNonsymmetricNe(bundle.g).profiles) {
      const auto [ne1, ne2] = ForwardMap(bundle, z.x, z.y);
      check.Expect(BackwardMap(bundle, ne1, ne2) == z,
                   s.label + ": backward(forward) differs");
      ++composites;
    }
  }
  return check.Finish(std::to_string(pairs) + " ordered pairs, " +
                      std::to_string(composites) + " composite equilibria");
}

Outcome Rank1SolverCorrectness() {
  Generator gen(20267);
  Checker check;
  int oracle_checked = 0, searched = 0;
  for (int i = 0; i < 100; ++i) {
    const Rank1Instance inst = RandomRank1(gen, 2 + i % 4);
    const Rank1Solution sol = SolveSymmetricRank1(inst.a);
    const Rank1Decomposition dec = DecomposeRank1(inst.a);
    const std::string tag = "instance " + std::to_string(i);
    check.Expect(IsSymmetricNe(inst.a, sol.x).holds, tag + ": not a symmetric NE");
    check.Expect(Dot(dec.d, sol.x.weights()) == sol.fixed_point,
                 tag + ": d.x != lambda*");
    searched += sol.iterations > 0;
    const SymmetricEnumerationResult oracle = EnumerateSymmetricNe(inst.a);
    if (!oracle.degenerate) {
      ++oracle_checked;
      check.Expect(std::find(oracle.equilibria.begin(), oracle.equilibria.end(),
                             sol.x) != oracle.equilibria.end(),
                   tag + ": output " + Str(sol.x) + " not in oracle list");
    }
  }
  return check.Finish("100 instances, " + std::to_string(oracle_checked) +
                      " oracle-checked, " + std::to_string(searched) +
                      " via binary search");
}

Outcome ParameterizedLpProperties() {
  Generator gen(20268);
  Checker check;
  for (int i = 0; i < 60; ++i) {
    const Rank1Instance inst = RandomRank1(gen, 2 + i % 4);
    const Rank1Decomposition dec = DecomposeRank1(inst.a);
    const std::size_t n = dec.size();
    // Feasible-point inequality, for the game and for LP(lambda).
    for (int s = 0; s < 10; ++s) {
      const MixedStrategy x = s % 3 == 0 ? MixedStrategy::Pure(n, gen.Int(0, n - 1))
                                         : gen.Simplex(n);
      const Vector ax = Multiply(inst.a, x.weights());
      const Rational pi = *std::max_element(ax.begin(), ax.end());
      const Rational gap = Dot(x.weights(), ax) - pi;
      check.Expect(gap <= 0 && gap.is_zero() == IsSymmetricNe(inst.a, x).holds,
                   "quadratic gap");
      const Rational lambda = gen.SmallRational(6, 4);
      Vector lhs = Multiply(dec.k, x.weights());
      for (std::size_t k = 0; k < n; ++k) lhs[k] += dec.c[k] * lambda / 2;
      const Rational pl = *std::max_element(lhs.begin(), lhs.end());
      Vector point = x.weights();
      point.push_back(pl);
      const LinearProgram lp = BuildLpLambda(dec, lambda);
      bool complementary = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(x[k] * (lhs[k] - pl)).is_zero()) complementary = false;
      }
      const Rational value = lp.Evaluate(point);
      check.Expect(lp.IsFeasible(point) && value <= 0 &&
                       value.is_zero() == complementary,
                   "LP(lambda) feasible-point inequality");
    }
    // Zero optimal value over a lambda grid, and the witness check.
    const Rational lo = *std::min_element(dec.d.begin(), dec.d.end()) - 1;
    const Rational hi = *std::max_element(dec.d.begin(), dec.d.end()) + 1;
    for (Rational lambda = lo; lambda <= hi; lambda += Q("1/2")) {
      const LpOutcome out = Solve(BuildLpLambda(dec, lambda));
      check.Expect(out.optimal() && out.objective_value.is_zero(),
                   "nonzero LP(lambda) optimum");
      const LambdaInterval f = FInterval(dec, lambda);
      const Vector v(n, lambda);
      check.Expect(WitnessIsSymmetricNe(dec, lambda, f.witness_lo, v) &&
                       WitnessIsSymmetricNe(dec, lambda, f.witness_hi, v),
                   "witness check with v = lambda * 1");
    }
  }
  return check.Finish(std::to_string(check.checks()) + " exact checks on 60 games");
}

Outcome RankZeroPath() {
  const RationalMatrix rps = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  const Rank1Solution sol = SolveSymmetricRank1(rps);
  Checker check;
  check.Expect(sol.x == MixedStrategy::Uniform(3), "got " + Str(sol.x));
  return check.Finish("x = " + Str(sol.x));
}

PositiveDiagonal RandomDiagonal(Generator& gen, std::size_t n) {
  Vector d(n);
  for (auto& v : d) v = Rational(mpz_class(gen.Int(1, 9)), mpz_class(gen.Int(1, 4)));
  return PositiveDiagonal(d);
}

Outcome ImitationContracts() {
  Generator gen(20270);
  Checker check;
  int repairs = 0, equilibria = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 4;
    const RationalMatrix a = gen.IntMatrix(n, n, 1, 5);
    const RationalMatrix id = RationalMatrix::Identity(n);
    for (const Profile& p : EnumerateNe(BimatrixGame(a, id)).equilibria) {
      ++equilibria;
      const MixedStrategy y = LiftToSymmetric(a, p.x, p.y);
      check.Expect(IsSymmetricNe(a, y).holds, "lift");
      const PositiveDiagonal diag = RandomDiagonal(gen, n);
      check.Expect(IsNash(BimatrixGame(a, diag.ToMatrix()),
                          RescaleForDiagonal(p.x, diag), p.y)
                       .holds,
                   "rescale");
    }
    for (const MixedStrategy& y : EnumerateSymmetricNe(a).equilibria) {
      // Positive payoffs everywhere, so the positivity-defined support is
      // all indices; the repair matters whenever argmax is smaller.
      if (Argmax(Multiply(a, y.weights())).size() < n) ++repairs;
      for (int k = 0; k < 10; ++k) {
        const PositiveDiagonal diag = RandomDiagonal(gen, n);
        const MixedStrategy x = WitnessForDiagonal(a, y, diag);
        check.Expect(IsNash(BimatrixGame(a, diag.ToMatrix()), x, y).holds,
                     "witness");
      }
    }
  }
  check.Expect(repairs > 0, "argmax repair path never exercised");
  return check.Finish("50 games, " + std::to_string(equilibria) +
                      " imitation equilibria, " + std::to_string(repairs) +
                      " witnesses needing the argmax repair");
}

Outcome CliDeterminism() {
  Checker check;
  const std::string dir = SYMNASH_GOLDEN_DIR;
  for (const auto& c : testing::GoldenCases()) {
    const testing::CliRun first = testing::RunGolden(c, dir);
    const testing::CliRun second = testing::RunGolden(c, dir);
    check.Expect(first.out == second.out && first.err == second.err &&
                     first.exit_code == second.exit_code,
                 std::string(c.name) + ": runs differ");
    check.Expect(first.out == testing::ReadFile(dir + "/" + c.name + ".out"),
                 std::string(c.name) + ": differs from golden file");
  }
  return check.Finish(std::to_string(testing::GoldenCases().size()) +
                      " golden cases, two runs each");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

int Main() {
  std::vector<Source> corpus;
  const std::vector<Criterion> criteria = {
      {1, "unique symmetric NE of D", 1, BaseGameUniqueSymmetricEquilibrium},
      {2, "perturbed base game sweep", 10, PerturbedBaseGameSweep},
      {3, "collapse payoff identity", 10, CollapsePayoffIdentity},
      {4, "non-symmetric NE existence", 30, NonsymmetricExistence},
      {5, "counting correspondence k(k-1)", 60,
       [&] {
         corpus = CountingCorpus();
         return CountingCorrespondence(corpus);
       }},
      {6, "forward/backward round trips", 60,
       [&] {
         if (corpus.empty()) corpus = CountingCorpus();
         return RoundTrips(corpus);
       }},
      {7, "rank-1 solver correctness", 120, Rank1SolverCorrectness},
      {8, "parameterized LP property suites", 30, ParameterizedLpProperties},
      {9, "rank-0 path on rock-paper-scissors", 1, RankZeroPath},
      {10, "imitation game contracts", 30, ImitationContracts},
      {11, "CLI golden determinism", 60, CliDeterminism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3fs < %.0fs", seconds,
                  c.limit_seconds);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL")
              << " | " << c.title << " | " << timing
              << (in_time ? "" : " (time limit exceeded)") << " | tolerance 0 | "
              << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace symnash

int main() { return symnash::Main(); }
