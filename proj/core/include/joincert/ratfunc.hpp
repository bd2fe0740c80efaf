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

#ifndef JOINCERT_RATFUNC_HPP
#define JOINCERT_RATFUNC_HPP

#include <string>

#include "joincert/polynomial.hpp"

namespace joincert {

/// Element of Q(c): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(int v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  /// The variable c itself.
  static RatFunc var() { return RatFunc(Poly::var()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Numerator as a polynomial; throws InvariantViolation if the
  /// denominator is not constant.
  Poly as_polynomial() const;

  /// Value at a rational point; DomainError if the denominator vanishes.
  Rational operator()(const Rational& c) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace joincert

#endif  // JOINCERT_RATFUNC_HPP
