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

#ifndef SYMNASH_ENUMERATE_H_
#define SYMNASH_ENUMERATE_H_

#include <cstddef>
#include <vector>

#include "symnash/game.h"
#include "symnash/matrix.h"

namespace symnash {

inline constexpr std::size_t kDefaultEnumerationBound = 8;

// Equilibria found by support enumeration, sorted lexicographically by
// (x, y) with no duplicates.
//
// `degenerate` is set when some support pair carries a positive-dimensional
// set of equilibria, when a support system is singular, or when some
// equilibrium has more pure best responses than support strategies.
// `continuum` is the first case alone: only then is the equilibrium set
// infinite, and the listed profile for that support pair is the
// lexicographically least point of its closure.
struct EnumerationResult {
  std::vector<Profile> equilibria;
  bool degenerate = false;
  bool continuum = false;
};

struct SymmetricEnumerationResult {
  std::vector<MixedStrategy> equilibria;
  bool degenerate = false;
  bool continuum = false;
};

// All Nash equilibria of (A, B). Throws TooLarge when either player has more
// than `bound` strategies.
EnumerationResult EnumerateNe(const BimatrixGame& game,
                              std::size_t bound = kDefaultEnumerationBound);

// All symmetric equilibria (x, x) of (A, A^T).
SymmetricEnumerationResult EnumerateSymmetricNe(
    const RationalMatrix& a, std::size_t bound = kDefaultEnumerationBound);

struct NonsymmetricCount {
  std::size_t count = 0;
  bool degenerate = false;
  bool continuum = false;
  std::vector<Profile> profiles;  // the equilibria with x != y, sorted
};

NonsymmetricCount CountNonsymmetricNe(
    const RationalMatrix& a, std::size_t bound = kDefaultEnumerationBound);

}  // namespace symnash

#endif  // SYMNASH_ENUMERATE_H_
