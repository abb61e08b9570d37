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

#ifndef SYMNASH_REDUCTION_H_
#define SYMNASH_REDUCTION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symnash/enumerate.h"
#include "symnash/game.h"
#include "symnash/matrix.h"
#include "symnash/rational.h"

namespace symnash {

// A strategy of the composite game split into its blocks (c, a, b) of sizes
// 1, m and n.
struct BlockStrategy {
  Rational c;
  Vector a;
  Vector b;

  static BlockStrategy Split(std::span<const Rational> z, std::size_t m,
                             std::size_t n);
  Vector Flatten() const;
};

// The symmetric game (G, G^T) built from a bimatrix game, plus what is needed
// to map equilibria back and forth. Strategy layout: index 0 | 1..m | m+1..m+n.
struct ReductionBundle {
  BimatrixGame source;  // normalized into [cap/2, cap]
  std::size_t m = 0;
  std::size_t n = 0;
  RationalMatrix g;
  AffineTransformRecord transform_a;
  AffineTransformRecord transform_b;
  Rational cap;

  BlockStrategy Split(const MixedStrategy& z) const {
    return BlockStrategy::Split(z.weights(), m, n);
  }
};

// The 3x3 base game with a unique, fully mixed symmetric equilibrium.
RationalMatrix BaseMatrix();

// The (1+m+n)-square block-constant matrix with blocks
//   [0 4 0]
//   [2 0 4]
//   [3 2 0].
RationalMatrix BlockConstantMatrix(std::size_t m, std::size_t n);

// G = K + [[0,0,0],[0,0,A],[0,B^T,0]] on the normalized game.
ReductionBundle BuildComposite(const BimatrixGame& game,
                               const Rational& cap = kDefaultCap);

// (c, sum a, sum b).
std::array<Rational, 3> Collapse(const BlockStrategy& x);

struct EpsilonQuad {
  Rational eps1;        // P(A; a, b')
  Rational eps2;        // P(B; a', b)
  Rational eps1_prime;  // P(A; a', b)
  Rational eps2_prime;  // P(B; a, b')
};

EpsilonQuad Epsilons(std::span<const Rational> a, std::span<const Rational> b,
                     std::span<const Rational> a_prime,
                     std::span<const Rational> b_prime,
                     const BimatrixGame& game);

// Base matrix with entry (1,2) raised by eps1 and entry (2,1) by eps2
// (0-based).
RationalMatrix DEps(const Rational& eps1, const Rational& eps2);

// The fully mixed equilibrium (v, w) of (D_{eps1,eps2}, D_{eps1',eps2'}^T).
// v equalizes the column player's payoffs under D_{eps1',eps2'}, w the row
// player's under D_{eps1,eps2}. Throws NotFullSupport if either has a
// nonpositive component.
std::pair<MixedStrategy, MixedStrategy> SolveDEps(const EpsilonQuad& eps);

// Equilibrium (x, y) of (G, G^T) to the two source equilibria
// ((eta(a), eta(b')), (eta(a'), eta(b))).
std::pair<Profile, Profile> ForwardMap(const ReductionBundle& bundle,
                                       const MixedStrategy& x,
                                       const MixedStrategy& y);

// Source equilibria ne1 = (a, b') and ne2 = (a', b) to the composite
// equilibrium ((v1, v2 a, v3 b), (w1, w2 a', w3 b')).
Profile BackwardMap(const ReductionBundle& bundle, const Profile& ne1,
                    const Profile& ne2);

struct CorrespondenceEntry {
  std::size_t first = 0;   // index into source_equilibria
  std::size_t second = 0;  // index into source_equilibria
  Profile composite;
  std::optional<std::size_t> matched;  // index into composite_nonsymmetric
};

struct CountingReport {
  std::size_t k = 0;
  std::size_t nonsymmetric = 0;
  bool holds = false;
  bool degenerate = false;  // isolated but degenerate equilibria were present
  std::vector<Profile> source_equilibria;
  std::vector<Profile> composite_nonsymmetric;
  std::vector<CorrespondenceEntry> table;
};

// Checks that the composite's non-symmetric equilibria are exactly the
// images of ordered pairs of distinct source equilibria. Throws
// DegenerateGame when either game has a continuum of equilibria.
CountingReport CheckCountingCorrespondence(
    const BimatrixGame& game, const Rational& cap = kDefaultCap,
    std::size_t bound = kDefaultEnumerationBound);

}  // namespace symnash

#endif  // SYMNASH_REDUCTION_H_
