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

#include "joincert/rational.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "joincert/errors.hpp"

namespace joincert {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

// Simplest rational in (lo, hi); hi == nullopt means +infinity. 0 <= lo.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  const Integer fl = floor_of(lo);
  const Rational next{Integer(fl + 1)};
  if (!hi || next < *hi) return next;
  // (lo, hi) lies inside [fl, fl + 1]; recurse on the reciprocal of the
  // fractional parts (continued-fraction step).
  const Rational base(fl);
  const Rational inner_lo = (*hi - base).inverse();
  std::optional<Rational> inner_hi;
  if (lo != base) inner_hi = (lo - base).inverse();
  return base + simplest_nonneg(inner_lo, inner_hi).inverse();
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      throw DomainError("not a rational number: \"" + std::string(text) + "\"");
    }
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw DomainError("not a rational number: \"" + std::string(text) + "\"");
  }
  const Integer d = parse_integer(den);
  if (d == 0) throw DomainError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_integer(num), d);
}

Rational Rational::pow2(long exponent) {
  Integer p = 1;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(den(), num());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("simplest_between requires lo < hi");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace joincert
