// Copyright 2026 The joincert Authors.
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

#ifndef JOINCERT_RATIONAL_HPP
#define JOINCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace joincert {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p", "-p", "p/q" (decimal integers, q != 0). Surrounding
  /// whitespace or any other character is an error.
  static Rational parse(std::string_view text);

  /// 2^exponent for any integer exponent.
  static Rational pow2(long exponent);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;

  /// Canonical form: "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational pow(const Rational& base, long exponent);

/// Non-negative gcd of two integers.
Integer gcd(const Integer& a, const Integer& b);

/// The rational in (lo, hi) with the smallest denominator (then smallest
/// |numerator|). Stern-Brocot descent; requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace joincert

template <>
struct std::hash<joincert::Rational> {
  std::size_t operator()(const joincert::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};

#endif  // JOINCERT_RATIONAL_HPP
