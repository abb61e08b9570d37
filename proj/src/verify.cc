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

#include "symnash/verify.h"

#include <algorithm>

#include "symnash/errors.h"

namespace symnash {
namespace {

// Checks one player's complementarity condition against the payoff vector
// that player faces.
std::optional<Violation> CheckBestResponse(int player,
                                           std::span<const Rational> strategy,
                                           std::span<const Rational> payoffs,
                                           Rational& max_out) {
  max_out = *std::max_element(payoffs.begin(), payoffs.end());
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    if (strategy[i].sign() > 0 && payoffs[i] != max_out) {
      Violation v;
      v.player = player;
      v.played = i;
      v.strategy = Argmax(payoffs).front();
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::size_t> Argmax(std::span<const Rational> v) {
  std::vector<std::size_t> out;
  if (v.empty()) return out;
  const Rational best = *std::max_element(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == best) out.push_back(i);
  }
  return out;
}

Rational Payoff(const RationalMatrix& m, std::span<const Rational> z1,
                std::span<const Rational> z2) {
  if (z1.size() != m.rows() || z2.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "payoff: vector lengths");
  }
  const MixedStrategy p = Eta(z1);
  const MixedStrategy q = Eta(z2);
  return Bilinear(p.weights(), m, q.weights());
}

NeCertificate IsNash(const BimatrixGame& game, const MixedStrategy& x,
                     const MixedStrategy& y) {
  if (x.size() != game.rows() || y.size() != game.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategy lengths do not match the game");
  }
  NeCertificate cert;
  const Vector row_payoffs = Multiply(game.a(), y.weights());
  const Vector col_payoffs = LeftMultiply(x.weights(), game.b());
  cert.violation = CheckBestResponse(1, x.weights(), row_payoffs, cert.pi1);
  auto second = CheckBestResponse(2, y.weights(), col_payoffs, cert.pi2);
  if (!cert.violation) cert.violation = second;
  cert.holds = !cert.violation.has_value();
  return cert;
}

NeCertificate IsSymmetricNe(const RationalMatrix& a, const MixedStrategy& x) {
  if (!a.is_square() || x.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "symmetric check needs square A matching x");
  }
  NeCertificate cert;
  const Vector payoffs = Multiply(a, x.weights());
  cert.violation = CheckBestResponse(1, x.weights(), payoffs, cert.pi1);
  cert.pi2 = cert.pi1;
  cert.holds = !cert.violation.has_value();
  return cert;
}

}  // namespace symnash
