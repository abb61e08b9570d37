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

#include "symnash/reduction.h"

#include <algorithm>
#include <map>
#include <string>

#include "symnash/errors.h"
#include "symnash/verify.h"

namespace symnash {
namespace {

// Block constants of K, indexed by (row block, column block).
constexpr int kBlockConstants[3][3] = {{0, 4, 0}, {2, 0, 4}, {3, 2, 0}};

std::size_t BlockOf(std::size_t index, std::size_t m) {
  if (index == 0) return 0;
  return index <= m ? 1 : 2;
}

bool IsZeroVector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

// Unique z with (M z)_i equal for all i and sum z = 1.
Vector Equalizer(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix system(n + 1, n + 1);
  Vector rhs(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) system(i, j) = m(i, j);
    system(i, n) = -1;
    system(n, i) = 1;
  }
  rhs[n] = 1;
  const auto solved = SolveLinearSystem(system, rhs);
  if (!solved || !solved->unique()) {
    throw Error(ErrorCode::kNotFullSupport,
                "perturbed base game has no unique equalizer");
  }
  Vector z(solved->particular.begin(), solved->particular.begin() + 3);
  for (const auto& v : z) {
    if (v.sign() <= 0) {
      throw Error(ErrorCode::kNotFullSupport,
                  "equalizer " + FormatVector(z) + " is not fully mixed");
    }
  }
  return z;
}

}  // namespace

BlockStrategy BlockStrategy::Split(std::span<const Rational> z, std::size_t m,
                                   std::size_t n) {
  if (z.size() != 1 + m + n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "composite strategy has " + std::to_string(z.size()) +
                    " entries, expected " + std::to_string(1 + m + n));
  }
  BlockStrategy out;
  out.c = z[0];
  out.a.assign(z.begin() + 1, z.begin() + 1 + static_cast<long>(m));
  out.b.assign(z.begin() + 1 + static_cast<long>(m), z.end());
  return out;
}

Vector BlockStrategy::Flatten() const {
  Vector out;
  out.reserve(1 + a.size() + b.size());
  out.push_back(c);
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

RationalMatrix BaseMatrix() { return DEps(0, 0); }

RationalMatrix BlockConstantMatrix(std::size_t m, std::size_t n) {
  const std::size_t size = 1 + m + n;
  RationalMatrix k(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      k(r, c) = kBlockConstants[BlockOf(r, m)][BlockOf(c, m)];
    }
  }
  return k;
}

ReductionBundle BuildComposite(const BimatrixGame& game, const Rational& cap) {
  auto [a, record_a] = NormalizePositiveSmall(game.a(), cap);
  auto [b, record_b] = NormalizePositiveSmall(game.b(), cap);
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();

  RationalMatrix g = BlockConstantMatrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(1 + i, 1 + m + j) += a(i, j);
      g(1 + m + j, 1 + i) += b(i, j);
    }
  }
  return ReductionBundle{BimatrixGame(std::move(a), std::move(b)),
                         m,
                         n,
                         std::move(g),
                         record_a,
                         record_b,
                         cap};
}

std::array<Rational, 3> Collapse(const BlockStrategy& x) {
  return {x.c, Sum(x.a), Sum(x.b)};
}

EpsilonQuad Epsilons(std::span<const Rational> a, std::span<const Rational> b,
                     std::span<const Rational> a_prime,
                     std::span<const Rational> b_prime,
                     const BimatrixGame& game) {
  return EpsilonQuad{Payoff(game.a(), a, b_prime),
                     Payoff(game.b(), a_prime, b),
                     Payoff(game.a(), a_prime, b),
                     Payoff(game.b(), a, b_prime)};
}

RationalMatrix DEps(const Rational& eps1, const Rational& eps2) {
  RationalMatrix d = BlockConstantMatrix(1, 1);
  d(1, 2) += eps1;
  d(2, 1) += eps2;
  return d;
}

std::pair<MixedStrategy, MixedStrategy> SolveDEps(const EpsilonQuad& eps) {
  const RationalMatrix row_game = DEps(eps.eps1, eps.eps2);
  const RationalMatrix col_game = DEps(eps.eps1_prime, eps.eps2_prime);
  MixedStrategy v(Equalizer(col_game));
  MixedStrategy w(Equalizer(row_game));
  if (!IsNash(BimatrixGame(row_game, col_game.Transpose()), v, w).holds) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "equalizing pair is not an equilibrium");
  }
  return {std::move(v), std::move(w)};
}

std::pair<Profile, Profile> ForwardMap(const ReductionBundle& bundle,
                                       const MixedStrategy& x,
                                       const MixedStrategy& y) {
  const BimatrixGame composite(bundle.g, bundle.g.Transpose());
  if (x.size() != 1 + bundle.m + bundle.n ||
      y.size() != 1 + bundle.m + bundle.n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "strategies do not match the composite game");
  }
  if (!IsNash(composite, x, y).holds) {
    throw Error(ErrorCode::kNotAnEquilibrium,
                "profile is not an equilibrium of (G, G^T)");
  }
  const BlockStrategy bx = bundle.Split(x);
  const BlockStrategy by = bundle.Split(y);
  for (const auto* block : {&bx.a, &bx.b, &by.a, &by.b}) {
    if (IsZeroVector(*block)) {
      throw Error(ErrorCode::kInternalInvariantViolation,
                  "equilibrium of (G, G^T) with a zero block");
    }
  }
  Profile ne1{Eta(bx.a), Eta(by.b)};
  Profile ne2{Eta(by.a), Eta(bx.b)};
  return {std::move(ne1), std::move(ne2)};
}

Profile BackwardMap(const ReductionBundle& bundle, const Profile& ne1,
                    const Profile& ne2) {
  for (const Profile* ne : {&ne1, &ne2}) {
    if (!IsNash(bundle.source, ne->x, ne->y).holds) {
      throw Error(ErrorCode::kNotAnEquilibrium,
                  "source profile is not an equilibrium");
    }
  }
  const Vector& a = ne1.x.weights();
  const Vector& b_prime = ne1.y.weights();
  const Vector& a_prime = ne2.x.weights();
  const Vector& b = ne2.y.weights();
  const auto [v, w] =
      SolveDEps(Epsilons(a, b, a_prime, b_prime, bundle.source));

  const BlockStrategy bx{v[0], Scale(v[1], a), Scale(v[2], b)};
  const BlockStrategy by{w[0], Scale(w[1], a_prime), Scale(w[2], b_prime)};
  Profile out{MixedStrategy(bx.Flatten()), MixedStrategy(by.Flatten())};
  if (!IsNash(BimatrixGame(bundle.g, bundle.g.Transpose()), out.x, out.y)
           .holds) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "backward image is not an equilibrium of (G, G^T)");
  }
  return out;
}

CountingReport CheckCountingCorrespondence(const BimatrixGame& game,
                                           const Rational& cap,
                                           std::size_t bound) {
  const ReductionBundle bundle = BuildComposite(game, cap);
  const EnumerationResult source = EnumerateNe(bundle.source, bound);
  if (source.continuum) {
    throw Error(ErrorCode::kDegenerateGame,
                "source game has a continuum of equilibria");
  }
  const NonsymmetricCount composite = CountNonsymmetricNe(bundle.g, bound);
  if (composite.continuum) {
    throw Error(ErrorCode::kDegenerateGame,
                "composite game has a continuum of equilibria");
  }

  CountingReport report;
  report.k = source.equilibria.size();
  report.nonsymmetric = composite.count;
  report.degenerate = source.degenerate || composite.degenerate;
  report.source_equilibria = source.equilibria;
  report.composite_nonsymmetric = composite.profiles;

  std::map<Profile, std::size_t> index;
  for (std::size_t i = 0; i < composite.profiles.size(); ++i) {
    index.emplace(composite.profiles[i], i);
  }
  std::vector<bool> used(composite.profiles.size(), false);
  bool bijective = true;
  for (std::size_t i = 0; i < report.k; ++i) {
    for (std::size_t j = 0; j < report.k; ++j) {
      if (i == j) continue;
      CorrespondenceEntry entry;
      entry.first = i;
      entry.second = j;
      entry.composite = BackwardMap(bundle, source.equilibria[i],
                                    source.equilibria[j]);
      if (auto it = index.find(entry.composite); it != index.end()) {
        entry.matched = it->second;
        if (used[it->second]) bijective = false;
        used[it->second] = true;
      } else {
        bijective = false;
      }
      report.table.push_back(std::move(entry));
    }
  }
  bijective = bijective && std::all_of(used.begin(), used.end(),
                                       [](bool u) { return u; });
  const std::size_t pairs = report.k == 0 ? 0 : report.k * (report.k - 1);
  report.holds = bijective && report.nonsymmetric == pairs;
  return report;
}

}  // namespace symnash
