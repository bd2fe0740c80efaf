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

#ifndef JOINCERT_POLYNOMIAL_HPP
#define JOINCERT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "joincert/errors.hpp"
#include "joincert/rational.hpp"

namespace joincert {

/// Dense univariate polynomial over a field K, coefficients lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
///
/// K must provide K(0), K(1), + - * /, == and is_zero().
template <class K>
class Polynomial {
 public:
  using coeff_type = K;

  Polynomial() = default;
  Polynomial(const K& constant) : c_{constant} { trim(); }  // NOLINT
  Polynomial(int constant) : Polynomial(K(constant)) {}      // NOLINT
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Polynomial monomial(const K& coeff, std::size_t degree) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }
  /// The indeterminate itself.
  static Polynomial var() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }

  /// Horner evaluation at a value of any type that mixes with K.
  template <class V>
  V operator()(const V& v) const {
    V acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + V(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = K(0) - v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const K& s, Polynomial a) {
    for (auto& v : a.c_) v = s * v;
    a.trim();
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
  if (p.degree() < 1) return {};
  std::vector<K> r(p.size() - 1, K(0));
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * p.coeffs()[i];
  return Polynomial<K>(std::move(r));
}

/// p(q(x)).
template <class K>
Polynomial<K> compose(const Polynomial<K>& p, const Polynomial<K>& q) {
  Polynomial<K> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * q + Polynomial<K>(*it);
  }
  return acc;
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, unsigned n) {
  Polynomial<K> r(K(1)), b = p;
  while (n) {
    if (n & 1U) r = r * b;
    n >>= 1U;
    if (n) b = b * b;
  }
  return r;
}

/// Euclidean division; deg(remainder) < deg(b).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>(), a};
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
  const K& lead = b.leading();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const K q = rem[k + db] / lead;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

/// Exact quotient; throws InvariantViolation when b does not divide a.
template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto [q, r] = divrem(a, b);
  ensure(r.is_zero(), "exact polynomial division left a remainder");
  return q;
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  return (K(1) / p.leading()) * p;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

using Poly = Polynomial<Rational>;

}  // namespace joincert

#endif  // JOINCERT_POLYNOMIAL_HPP
