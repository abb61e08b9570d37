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

#include "symnash/rational.h"

#include <cctype>
#include <utility>

#include "symnash/errors.h"

namespace symnash {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  }
  value_.canonicalize();
}

std::optional<Rational> Rational::TryParse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view p = text.substr(0, slash);
    const std::string_view q = text.substr(slash + 1);
    if (!AllDigits(p) || !AllDigits(q)) return std::nullopt;
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) return std::nullopt;
  } else if (const auto dot = text.find('.');
             dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!AllDigits(whole) || !AllDigits(frac)) return std::nullopt;
    num.set_str(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!AllDigits(text)) return std::nullopt;
    num.set_str(std::string(text), 10);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::Parse(std::string_view text) {
  auto parsed = TryParse(text);
  if (!parsed) {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(text) + "'");
  }
  return *std::move(parsed);
}

mpz_class Rational::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::Reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "reciprocal of 0");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorCode::kDivisionByZero, "x / 0");
  value_ /= other.value_;
  return *this;
}

Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational SimplestInInterval(const Rational& lo, const Rational& hi) {
  if (hi < lo) {
    throw Error(ErrorCode::kPreconditionViolated, "empty interval");
  }
  const Rational floor_lo(lo.Floor());
  if (floor_lo == lo) return lo;
  if (floor_lo + 1 <= hi) return floor_lo + 1;
  // Both ends share the integer part; recurse on the reciprocal of the
  // fractional parts, which swaps their order.
  const Rational inner =
      SimplestInInterval((hi - floor_lo).Reciprocal(),
                         (lo - floor_lo).Reciprocal());
  return floor_lo + inner.Reciprocal();
}

}  // namespace symnash
