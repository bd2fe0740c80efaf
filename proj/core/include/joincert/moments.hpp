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

#ifndef JOINCERT_MOMENTS_HPP
#define JOINCERT_MOMENTS_HPP

#include "joincert/polynomial.hpp"
#include "joincert/ratfunc.hpp"
#include "joincert/rational.hpp"

namespace joincert {

enum class Dimension { kDim5, kDim7 };

/// One member of the alpha/beta integral families.
///
///   alpha = int_{-1}^{1} (ct+1)^{-m} t^r w_a(t) dt
///   beta  = int_{-1}^{1} (ct+1)^{-m} t^r w_b(t) dt + boundary terms
///
/// dim5: w_a = 1 + x t, w_b = x s, m in {3,4,5}.
/// dim7: w_a = (1 + x1 t)(1 + x2 t), w_b = x1 s1 (1 + x2 t) + x2 s2 (1 + x1 t),
///       m in {4,5,6}.
/// For dim5 only x1 and s1 are read.
struct IntegralSpec {
  Dimension dim = Dimension::kDim5;
  int r = 0;
  int m = 4;
  Rational x1, x2, s1, s2;

  static IntegralSpec dim5(int r, int m, const Rational& x, const Rational& s = Rational(0));
  static IntegralSpec dim7(int r, int m, const Rational& x1, const Rational& x2,
                           const Rational& s1 = Rational(0), const Rational& s2 = Rational(0));
};

/// Integrand weights as polynomials in t.
Poly alpha_weight(const IntegralSpec& spec);
Poly beta_weight(const IntegralSpec& spec);

/// Exact values. DomainError when |c| >= 1 or the spec is invalid: |x_i|
/// outside (0,1), r or m out of range, or r + deg(weight) > m - 2 (the
/// antiderivative would contain a logarithm). beta requires m = 3 (dim5)
/// or m = 4 (dim7), the exponent shared with its boundary terms.
Rational alpha(const IntegralSpec& spec, const Rational& c);
Rational beta(const IntegralSpec& spec, const Rational& c);

/// The same integrals as elements of Q(c).
RatFunc alpha_symbolic(const IntegralSpec& spec);
RatFunc beta_symbolic(const IntegralSpec& spec);

/// int_{-1}^{1} (ct+1)^{-m} N(t) dt for a polynomial N over Q, by the
/// substitution u = 1 + ct. K is Rational (c a number) or RatFunc (c the
/// variable). Throws InvariantViolation if a u^{-1} term appears.
template <class K>
K moment_integral(const Poly& numerator, int m, const K& c);

extern template Rational moment_integral<Rational>(const Poly&, int, const Rational&);
extern template RatFunc moment_integral<RatFunc>(const Poly&, int, const RatFunc&);

/// Rewrites N(t) in u = 1 + ct, i.e. returns N((u - 1)/c); c != 0.
template <class K>
Polynomial<K> in_u(const Poly& numerator, const K& c);

extern template Polynomial<Rational> in_u<Rational>(const Poly&, const Rational&);
extern template Polynomial<RatFunc> in_u<RatFunc>(const Poly&, const RatFunc&);

/// K-valued power with a possibly negative exponent.
template <class K>
K ipow(const K& base, int e) {
  K r(1), b = base;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  while (n) {
    if (n & 1U) r = r * b;
    n >>= 1U;
    if (n) b = b * b;
  }
  return e < 0 ? K(1) / r : r;
}

}  // namespace joincert

#endif  // JOINCERT_MOMENTS_HPP
