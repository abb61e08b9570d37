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

#include "symnash/game.h"

#include <utility>

#include "symnash/errors.h"

namespace symnash {

MixedStrategy::MixedStrategy(Vector weights) : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw Error(ErrorCode::kInvalidStrategy, "empty strategy");
  }
  Rational total;
  for (const auto& w : weights_) {
    if (w.sign() < 0) {
      throw Error(ErrorCode::kInvalidStrategy, "negative weight " +
                                                   w.ToString());
    }
    total += w;
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidStrategy,
                "weights sum to " + total.ToString());
  }
}

MixedStrategy MixedStrategy::Pure(std::size_t n, std::size_t index) {
  Vector w(n);
  w.at(index) = 1;
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::Uniform(std::size_t n) {
  return MixedStrategy(
      Vector(n, Rational(1, static_cast<long>(n))));
}

std::vector<std::size_t> MixedStrategy::Support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!weights_[i].is_zero()) out.push_back(i);
  }
  return out;
}

BimatrixGame::BimatrixGame(RationalMatrix a, RationalMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payoff matrices A and B differ in shape");
  }
  if (a_.rows() == 0 || a_.cols() == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "empty game");
  }
}

SymmetricGame::SymmetricGame(RationalMatrix a) : a_(std::move(a)) {
  if (!a_.is_square() || a_.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "symmetric game needs a nonempty square matrix");
  }
}

MixedStrategy Eta(std::span<const Rational> z) {
  Rational total;
  for (const auto& v : z) {
    if (v.sign() < 0) {
      throw Error(ErrorCode::kInvalidStrategy, "eta of a negative vector");
    }
    total += v;
  }
  if (total.is_zero()) throw Error(ErrorCode::kZeroVector, "eta(0)");
  return MixedStrategy(Scale(total.Reciprocal(), z));
}

std::pair<RationalMatrix, AffineTransformRecord> NormalizePositiveSmall(
    const RationalMatrix& m, const Rational& cap) {
  if (cap.sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "cap must be positive");
  }
  const Rational lo = m.MinEntry();
  const Rational hi = m.MaxEntry();
  AffineTransformRecord record;
  if (lo == hi) {
    record.scale = 1;
    record.shift = cap / 2 - lo;
  } else {
    const Rational spread = hi - lo;
    record.scale = cap / (2 * spread);
    record.shift = spread - lo;
  }
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = record.Apply(m(r, c));
    }
  }
  return {std::move(out), record};
}

}  // namespace symnash
