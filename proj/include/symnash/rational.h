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

#ifndef SYMNASH_RATIONAL_H_
#define SYMNASH_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace symnash {

// Exact rational number backed by GMP. Always in lowest terms with a
// positive denominator; division by zero throws instead of trapping.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  // Accepts "p", "-p", "p/q" and finite decimals such as "0.25". Exponent
  // forms, "nan" and "inf" are rejected.
  static std::optional<Rational> TryParse(std::string_view text);
  static Rational Parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class Floor() const;
  Rational Abs() const { return Rational(mpq_class(abs(value_))); }
  Rational Reciprocal() const;

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// The rational with the smallest denominator in the closed interval
// [lo, hi], found by continued-fraction descent. Requires lo <= hi.
Rational SimplestInInterval(const Rational& lo, const Rational& hi);

}  // namespace symnash

#endif  // SYMNASH_RATIONAL_H_
