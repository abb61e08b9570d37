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

#ifndef SYMNASH_GAME_H_
#define SYMNASH_GAME_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "symnash/matrix.h"
#include "symnash/rational.h"

namespace symnash {

// Probability vector: nonnegative weights summing to exactly one.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  explicit MixedStrategy(Vector weights);

  static MixedStrategy Pure(std::size_t n, std::size_t index);
  static MixedStrategy Uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  const Vector& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  operator std::span<const Rational>() const { return weights_; }  // NOLINT

  std::vector<std::size_t> Support() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  Vector weights_;
};

struct Profile {
  MixedStrategy x;
  MixedStrategy y;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

// Two-player game: the row player receives A, the column player B.
class BimatrixGame {
 public:
  BimatrixGame(RationalMatrix a, RationalMatrix b);

  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

// Symmetric game (A, A^T); only A is stored.
class SymmetricGame {
 public:
  explicit SymmetricGame(RationalMatrix a);

  const RationalMatrix& a() const { return a_; }
  std::size_t size() const { return a_.rows(); }
  BimatrixGame AsBimatrix() const { return BimatrixGame(a_, a_.Transpose()); }

 private:
  RationalMatrix a_;
};

// value -> scale * (value + shift), with scale > 0.
struct AffineTransformRecord {
  Rational shift;
  Rational scale = 1;

  Rational Apply(const Rational& value) const { return scale * (value + shift); }
  Rational Invert(const Rational& value) const { return value / scale - shift; }
};

// z / sum(z). Throws ZeroVector for z = 0 and InvalidStrategy for negative
// components.
MixedStrategy Eta(std::span<const Rational> z);

inline const Rational kDefaultCap = Rational(1, 10);

// Positive affine map of M into [cap/2, cap]: constant matrices go to cap/2,
// otherwise cap * (M - lo + (hi - lo)) / (2 (hi - lo)).
std::pair<RationalMatrix, AffineTransformRecord> NormalizePositiveSmall(
    const RationalMatrix& m, const Rational& cap = kDefaultCap);

}  // namespace symnash

#endif  // SYMNASH_GAME_H_
