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
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "symnash/errors.h"
#include "symnash/verify.h"
#include "test_util.h"

namespace symnash {
namespace {

using ::symnash::testing::BaseD;
using ::symnash::testing::Generator;
using ::symnash::testing::MatchingPennies;
using ::symnash::testing::RockPaperScissors;
using ::symnash::testing::S;

TEST(EnumerateTest, CoordinationGame) {
  const RationalMatrix i2 = RationalMatrix::Identity(2);
  const EnumerationResult r = EnumerateNe(BimatrixGame(i2, i2));
  EXPECT_FALSE(r.degenerate);
  const std::vector<Profile> want = {
      {S({"0", "1"}), S({"0", "1"})},
      {S({"1/2", "1/2"}), S({"1/2", "1/2"})},
      {S({"1", "0"}), S({"1", "0"})},
  };
  EXPECT_EQ(r.equilibria, want);
}

TEST(EnumerateTest, MatchingPennies) {
  const EnumerationResult r = EnumerateNe(
      BimatrixGame(MatchingPennies(), Rational(-1) * MatchingPennies()));
  EXPECT_FALSE(r.degenerate);
  ASSERT_EQ(r.equilibria.size(), 1u);
  EXPECT_EQ(r.equilibria[0], (Profile{S({"1/2", "1/2"}), S({"1/2", "1/2"})}));
}

TEST(EnumerateTest, ZeroGameIsDegenerate) {
  const EnumerationResult r =
      EnumerateNe(BimatrixGame(RationalMatrix(2, 2), RationalMatrix(2, 2)));
  EXPECT_TRUE(r.degenerate);
  EXPECT_TRUE(r.continuum);
  EXPECT_FALSE(r.equilibria.empty());
}

TEST(EnumerateTest, SizeBound) {
  try {
    EnumerateNe(BimatrixGame(RationalMatrix(9, 2), RationalMatrix(9, 2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(EnumerateSymmetricNe(RationalMatrix(3, 3), 2), Error);
}

TEST(EnumerateTest, SymmetricExamples) {
  const SymmetricEnumerationResult d = EnumerateSymmetricNe(BaseD());
  EXPECT_FALSE(d.degenerate);
  EXPECT_EQ(d.equilibria, std::vector<MixedStrategy>{S({"2/7", "3/7", "2/7"})});

  const SymmetricEnumerationResult rps =
      EnumerateSymmetricNe(RockPaperScissors());
  EXPECT_EQ(rps.equilibria,
            std::vector<MixedStrategy>{S({"1/3", "1/3", "1/3"})});

  const SymmetricEnumerationResult small = EnumerateSymmetricNe({{1, 2}, {0, 1}});
  EXPECT_NE(std::find(small.equilibria.begin(), small.equilibria.end(),
                      S({"1", "0"})),
            small.equilibria.end());
}

TEST(EnumerateTest, NonsymmetricCountOfD) {
  const NonsymmetricCount c = CountNonsymmetricNe(BaseD());
  EXPECT_EQ(c.count, 0u);
  EXPECT_FALSE(c.degenerate);
}

// Independent oracle for 2x2 games without payoff ties: pure equilibria by
// inspection plus the fully mixed one from the indifference formulas.
std::set<Profile> Oracle2x2(const RationalMatrix& a, const RationalMatrix& b) {
  std::set<Profile> out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (a(i, j) >= a(1 - i, j) && b(i, j) >= b(i, 1 - j)) {
        out.insert({MixedStrategy::Pure(2, i), MixedStrategy::Pure(2, j)});
      }
    }
  }
  const Rational den_y = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  const Rational den_x = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
  if (!den_y.is_zero() && !den_x.is_zero()) {
    const Rational y1 = (a(1, 1) - a(0, 1)) / den_y;
    const Rational x1 = (b(1, 1) - b(1, 0)) / den_x;
    if (y1 > 0 && y1 < 1 && x1 > 0 && x1 < 1) {
      out.insert({MixedStrategy({x1, 1 - x1}), MixedStrategy({y1, 1 - y1})});
    }
  }
  return out;
}

TEST(EnumerateTest, MatchesClosedFormOracleOn2x2Games) {
  Generator gen(61);
  int checked = 0;
  while (checked < 300) {
    const RationalMatrix a = gen.IntMatrix(2, 2, -9, 9);
    const RationalMatrix b = gen.IntMatrix(2, 2, -9, 9);
    if (a(0, 0) == a(1, 0) || a(0, 1) == a(1, 1) || b(0, 0) == b(0, 1) ||
        b(1, 0) == b(1, 1)) {
      continue;
    }
    ++checked;
    const EnumerationResult r = EnumerateNe(BimatrixGame(a, b));
    EXPECT_FALSE(r.degenerate);
    const std::set<Profile> want = Oracle2x2(a, b);
    EXPECT_EQ(std::set<Profile>(r.equilibria.begin(), r.equilibria.end()), want);
    EXPECT_EQ(want.size() % 2, 1u);
  }
}

TEST(EnumerateTest, OutputIsSortedVerifiedAndDuplicateFree) {
  Generator gen(62);
  for (int i = 0; i < 150; ++i) {
    const std::size_t m = gen.Int(1, 4), n = gen.Int(1, 4);
    const BimatrixGame g(gen.IntMatrix(m, n, -2, 2), gen.IntMatrix(m, n, -2, 2));
    const EnumerationResult r = EnumerateNe(g);
    EXPECT_FALSE(r.equilibria.empty());
    EXPECT_TRUE(std::is_sorted(r.equilibria.begin(), r.equilibria.end()));
    EXPECT_EQ(std::adjacent_find(r.equilibria.begin(), r.equilibria.end()),
              r.equilibria.end());
    for (const Profile& p : r.equilibria) {
      EXPECT_TRUE(IsNash(g, p.x, p.y).holds);
    }
  }
}

MixedStrategy Permute(const MixedStrategy& s,
                      const std::vector<std::size_t>& perm) {
  Vector w(s.size());
  for (std::size_t i = 0; i < perm.size(); ++i) w[i] = s[perm[i]];
  return MixedStrategy(w);
}

TEST(EnumerateTest, PermutationInvarianceOnNondegenerateGames) {
  Generator gen(63);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    const std::size_t m = gen.Int(2, 4), n = gen.Int(2, 4);
    const BimatrixGame g(gen.IntMatrix(m, n, -20, 20),
                         gen.IntMatrix(m, n, -20, 20));
    const EnumerationResult r = EnumerateNe(g);
    if (r.degenerate) continue;
    ++checked;
    std::vector<std::size_t> pr(m), pc(n);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), gen.engine());
    std::shuffle(pc.begin(), pc.end(), gen.engine());
    RationalMatrix a(m, n), b(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = g.a()(pr[i], pc[j]);
        b(i, j) = g.b()(pr[i], pc[j]);
      }
    }
    const EnumerationResult permuted = EnumerateNe(BimatrixGame(a, b));
    EXPECT_FALSE(permuted.degenerate);
    std::set<Profile> want;
    for (const Profile& p : r.equilibria) {
      want.insert({Permute(p.x, pr), Permute(p.y, pc)});
    }
    EXPECT_EQ(std::set<Profile>(permuted.equilibria.begin(),
                                permuted.equilibria.end()),
              want);
  }
  EXPECT_GE(checked, 60);
}

TEST(EnumerateTest, SymmetricEnumerationMatchesDiagonalOfBimatrix) {
  Generator gen(64);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = gen.Int(1, 4);
    const RationalMatrix a = gen.IntMatrix(n, n, -9, 9);
    const EnumerationResult full = EnumerateNe(BimatrixGame(a, a.Transpose()));
    if (full.degenerate) continue;
    std::vector<MixedStrategy> diagonal;
    for (const Profile& p : full.equilibria) {
      if (p.x == p.y) diagonal.push_back(p.x);
    }
    const SymmetricEnumerationResult sym = EnumerateSymmetricNe(a);
    EXPECT_EQ(sym.equilibria, diagonal);
    const NonsymmetricCount count = CountNonsymmetricNe(a);
    EXPECT_EQ(count.count, full.equilibria.size() - diagonal.size());
    for (const Profile& p : count.profiles) EXPECT_NE(p.x, p.y);
  }
}

}  // namespace
}  // namespace symnash
