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

#ifndef SYMNASH_VERIFY_H_
#define SYMNASH_VERIFY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symnash/game.h"
#include "symnash/matrix.h"
#include "symnash/rational.h"

namespace symnash {

// A supported strategy that is not a best response. Players are 1 (row) and
// 2 (column); indices are 0-based.
struct Violation {
  int player = 0;
  // Lowest-index best response, i.e. the profitable deviation.
  std::size_t strategy = 0;
  // Lowest-index supported strategy whose payoff falls short of the maximum.
  std::size_t played = 0;
};

struct NeCertificate {
  bool holds = false;
  std::optional<Violation> violation;
  Rational pi1;  // max_k (A y)_k
  Rational pi2;  // max_k (x^T B)_k
};

// eta(z1)^T M eta(z2).
Rational Payoff(const RationalMatrix& m, std::span<const Rational> z1,
                std::span<const Rational> z2);

NeCertificate IsNash(const BimatrixGame& game, const MixedStrategy& x,
                     const MixedStrategy& y);

// (x, x) against (A, A^T): every supported i has (A x)_i = max_k (A x)_k.
NeCertificate IsSymmetricNe(const RationalMatrix& a, const MixedStrategy& x);

// Indices attaining the maximum of v.
std::vector<std::size_t> Argmax(std::span<const Rational> v);

}  // namespace symnash

#endif  // SYMNASH_VERIFY_H_
