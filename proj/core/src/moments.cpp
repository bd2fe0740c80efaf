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

#include "joincert/moments.hpp"

#include <string>

#include "joincert/errors.hpp"

namespace joincert {

namespace {

Poly one_plus(const Rational& x) { return Poly({Rational(1), x}); }

bool in_open_unit(const Rational& x) { return !x.is_zero() && x.abs() < Rational(1); }

// Structural degree of the weight, independent of accidental zeros in s.
int alpha_weight_degree(const IntegralSpec& s) { return s.dim == Dimension::kDim5 ? 1 : 2; }
int beta_weight_degree(const IntegralSpec& s) { return s.dim == Dimension::kDim5 ? 0 : 1; }

void validate_common(const IntegralSpec& s) {
  if (s.r < 0 || s.r > 2) throw DomainError("integral index r must be 0, 1 or 2");
  if (!in_open_unit(s.x1) || (s.dim == Dimension::kDim7 && !in_open_unit(s.x2))) {
    throw DomainError("x values must satisfy 0 < |x| < 1");
  }
}

void validate_alpha(const IntegralSpec& s) {
  validate_common(s);
  const int lo = s.dim == Dimension::kDim5 ? 3 : 4;
  if (s.m < lo || s.m > lo + 2) {
    throw DomainError("alpha exponent m out of range for this dimension: " + std::to_string(s.m));
  }
  if (s.r + alpha_weight_degree(s) > s.m - 2) {
    throw DomainError("alpha with r=" + std::to_string(s.r) + ", m=" + std::to_string(s.m) +
                      " has a logarithmic antiderivative");
  }
}

void validate_beta(const IntegralSpec& s) {
  validate_common(s);
  const int want = s.dim == Dimension::kDim5 ? 3 : 4;
  if (s.m != want) throw DomainError("beta exponent must be " + std::to_string(want));
  if (s.r + beta_weight_degree(s) > s.m - 2) {
    throw DomainError("beta with r=" + std::to_string(s.r) + " has a logarithmic antiderivative");
  }
}

void validate_c(const Rational& c) {
  if (!(c.abs() < Rational(1))) throw DomainError("|c| must be < 1, got " + c.str());
}

Poly t_pow(int r) { return Poly::monomial(Rational(1), static_cast<std::size_t>(r)); }

template <class K>
K beta_boundary(const IntegralSpec& s, const K& c) {
  K lower(1), upper(1);
  if (s.dim == Dimension::kDim5) {
    lower = K(Rational(1) - s.x1);
    upper = K(Rational(1) + s.x1);
  } else {
    lower = K((Rational(1) - s.x1) * (Rational(1) - s.x2));
    upper = K((Rational(1) + s.x1) * (Rational(1) + s.x2));
  }
  const K sign = (s.r % 2 == 0) ? K(1) : K(-1);
  return sign * ipow(K(1) - c, -s.m) * lower + ipow(K(1) + c, -s.m) * upper;
}

}  // namespace

IntegralSpec IntegralSpec::dim5(int r, int m, const Rational& x, const Rational& s) {
  return IntegralSpec{Dimension::kDim5, r, m, x, Rational(0), s, Rational(0)};
}

IntegralSpec IntegralSpec::dim7(int r, int m, const Rational& x1, const Rational& x2,
                                const Rational& s1, const Rational& s2) {
  return IntegralSpec{Dimension::kDim7, r, m, x1, x2, s1, s2};
}

Poly alpha_weight(const IntegralSpec& s) {
  if (s.dim == Dimension::kDim5) return one_plus(s.x1);
  return one_plus(s.x1) * one_plus(s.x2);
}

Poly beta_weight(const IntegralSpec& s) {
  if (s.dim == Dimension::kDim5) return Poly(s.x1 * s.s1);
  return (s.x1 * s.s1) * one_plus(s.x2) + (s.x2 * s.s2) * one_plus(s.x1);
}

template <class K>
Polynomial<K> in_u(const Poly& numerator, const K& c) {
  const K inv = K(1) / c;
  const Polynomial<K> t({K(0) - inv, inv});
  Polynomial<K> acc;
  for (auto it = numerator.coeffs().rbegin(); it != numerator.coeffs().rend(); ++it) {
    acc = acc * t + Polynomial<K>(K(*it));
  }
  return acc;
}

template <class K>
K moment_integral(const Poly& numerator, int m, const K& c) {
  if (c.is_zero()) {
    // u = 1 identically: integrate the polynomial directly.
    K acc(0);
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      if (i % 2 == 0) acc = acc + K(Rational(2) * numerator.coeffs()[i] / Rational(static_cast<long>(i + 1)));
    }
    return acc;
  }
  const Polynomial<K> n = in_u(numerator, c);
  const K lo = K(1) - c, hi = K(1) + c;
  K acc(0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    const K& coef = n.coeffs()[i];
    if (coef.is_zero()) continue;
    const int e = static_cast<int>(i) - m + 1;  // exponent after integration
    ensure(e != 0, "u^-1 term in moment integral (logarithmic antiderivative)");
    acc = acc + coef * (ipow(hi, e) - ipow(lo, e)) / K(static_cast<long>(e));
  }
  return acc / c;
}

template Rational moment_integral<Rational>(const Poly&, int, const Rational&);
template RatFunc moment_integral<RatFunc>(const Poly&, int, const RatFunc&);
template Polynomial<Rational> in_u<Rational>(const Poly&, const Rational&);
template Polynomial<RatFunc> in_u<RatFunc>(const Poly&, const RatFunc&);

Rational alpha(const IntegralSpec& spec, const Rational& c) {
  validate_alpha(spec);
  validate_c(c);
  return moment_integral(t_pow(spec.r) * alpha_weight(spec), spec.m, c);
}

Rational beta(const IntegralSpec& spec, const Rational& c) {
  validate_beta(spec);
  validate_c(c);
  return moment_integral(t_pow(spec.r) * beta_weight(spec), spec.m, c) + beta_boundary(spec, c);
}

RatFunc alpha_symbolic(const IntegralSpec& spec) {
  validate_alpha(spec);
  return moment_integral(t_pow(spec.r) * alpha_weight(spec), spec.m, RatFunc::var());
}

RatFunc beta_symbolic(const IntegralSpec& spec) {
  validate_beta(spec);
  const RatFunc c = RatFunc::var();
  return moment_integral(t_pow(spec.r) * beta_weight(spec), spec.m, c) + beta_boundary(spec, c);
}

}  // namespace joincert
