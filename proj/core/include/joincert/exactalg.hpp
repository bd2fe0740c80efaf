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

#ifndef JOINCERT_EXACTALG_HPP
#define JOINCERT_EXACTALG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "joincert/polynomial.hpp"
#include "joincert/ratfunc.hpp"
#include "joincert/rational.hpp"

namespace joincert {

// ---------------------------------------------------------------------------
// Small helpers over Q[z]

/// Polynomial from integer coefficients, lowest degree first.
Poly poly_from_ints(const std::vector<long>& coeffs);

/// Positive rational multiple of p with coprime integer coefficients. The
/// sign of p is preserved, so sign-based reasoning is unaffected.
Poly normalize_positive(const Poly& p);

/// Human-readable form such as "3*z^2 - 1/2*z + 1".
std::string to_string(const Poly& p, const std::string& var = "z");

int sign_at(const Poly& p, const Rational& x);

/// Number of sign changes in the coefficient sequence (zeros skipped).
int descartes_sign_changes(const Poly& p);

// ---------------------------------------------------------------------------
// Square-free structure

struct SquareFreeFactor {
  Poly factor;       // monic, square-free, pairwise coprime with the others
  int multiplicity;  // >= 1
};

/// Yun's algorithm. The product of factor^multiplicity equals monic(p).
std::vector<SquareFreeFactor> square_free_decomposition(const Poly& p);

/// p / gcd(p, p'), normalized with normalize_positive.
Poly square_free_part(const Poly& p);

// ---------------------------------------------------------------------------
// Sturm sequences and root counting

/// Sturm sequence of p (p, p', -rem, ...), each term positively rescaled.
std::vector<Poly> sturm_sequence(const Poly& p);

int sign_variations(const std::vector<Poly>& seq, const Rational& x);
/// Variations at +infinity (at_plus_infinity) or -infinity.
int sign_variations_at_infinity(const std::vector<Poly>& seq, bool at_plus_infinity);

/// Distinct real roots of p in the open interval (lo, hi). Throws
/// BoundaryRootError if p(lo) = 0 or p(hi) = 0, DomainError on a zero
/// polynomial or lo >= hi.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Distinct real roots of p in (0, +infinity); BoundaryRootError if p(0) = 0.
int count_positive_roots(const Poly& p);

// ---------------------------------------------------------------------------
// Root isolation

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity_hint = 1;
  /// Set when bisection landed exactly on the root.
  std::optional<Rational> exact;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Default interval width for isolate_roots.
inline Rational default_tolerance() { return Rational::pow2(-40); }

/// Disjoint isolating intervals, in increasing order, one per distinct
/// root of p in (lo, hi); each of width <= tolerance. Endpoint conditions
/// as for sturm_count.
std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                             const Rational& hi,
                                             const Rational& tolerance = default_tolerance());

/// Shrinks an isolating interval of a root of p to width <= width.
IsolatingInterval refine_root(const Poly& p, IsolatingInterval iv, const Rational& width);

/// The root inside iv if it is rational. Uses the rational root bound:
/// once the interval is narrower than 1/lc^2 at most one candidate fits.
std::optional<Rational> rational_root_in(const Poly& p, const IsolatingInterval& iv);

// ---------------------------------------------------------------------------
// Moebius substitution

/// (1+u)^deg(p) * p((1-u)/(1+u)). Maps roots in (-1,1) to roots in (0,inf).
Poly mobius_substitute(const Poly& p);

// ---------------------------------------------------------------------------
// Certified positivity on an open interval

enum class PositivityMethod { kSturmRootCount, kMobiusNonnegCoeffs, kEndpointDeflation };

std::string to_string(PositivityMethod m);

struct PositivityCertificate {
  Poly polynomial;
  Rational lo;
  Rational hi;
  PositivityMethod method = PositivityMethod::kSturmRootCount;

  // Deflation: polynomial = cofactor * (z - lo)^lo_mult * (hi - z)^hi_mult.
  int lo_multiplicity = 0;
  int hi_multiplicity = 0;
  Poly cofactor;

  // Sturm witness on the square-free part of the cofactor.
  Poly square_free;
  std::vector<Poly> sturm;
  Rational sample;
  Rational sample_value;

  // Moebius witness: all coefficients >= 0, at least one > 0.
  Poly transformed;
};

/// A rational point with p(point) <= 0, or (when p only touches zero at an
/// irrational root) that root's isolating interval.
struct Refutation {
  std::optional<Rational> point;
  Rational value;
  std::optional<IsolatingInterval> touching_root;
};

using PositivityResult = std::variant<PositivityCertificate, Refutation>;

/// Decides p > 0 on (lo, hi). DomainError on the zero polynomial.
PositivityResult certify_positive(const Poly& p, const Rational& lo = Rational(-1),
                                  const Rational& hi = Rational(1));

/// The Moebius nonnegative-coefficient certificate on (-1, 1), if it applies.
std::optional<PositivityCertificate> certify_positive_mobius(const Poly& p);

/// Replays a certificate from scratch; true iff every recorded fact holds.
bool verify(const PositivityCertificate& cert);

// ---------------------------------------------------------------------------
// Resultants

/// Determinant of a square matrix over a field, by Gaussian elimination.
template <class K>
K determinant(std::vector<std::vector<K>> m) {
  const std::size_t n = m.size();
  K det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return K(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = K(0) - det;
    }
    det = det * m[col][col];
    const K inv = K(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const K f = m[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return det;
}

/// Sylvester resultant of a and b (both of positive degree).
template <class K>
K resultant(const Polynomial<K>& a, const Polynomial<K>& b) {
  const int m = a.degree();
  const int n = b.degree();
  if (m < 1 || n < 1) throw DomainError("resultant needs positive-degree inputs");
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<K>> s(size, std::vector<K>(size, K(0)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r][r + m - i] = a.coeff(static_cast<std::size_t>(i));
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[n + r][r + n - i] = b.coeff(static_cast<std::size_t>(i));
  }
  return determinant(std::move(s));
}

// ---------------------------------------------------------------------------
// Bivariate polynomials: outer variable with coefficients in Q[inner].

using BiPoly = Polynomial<Poly>;

/// Evaluates the inner variable, leaving a polynomial in the outer one.
Poly eval_inner(const BiPoly& p, const Rational& v);

/// Evaluates the outer variable, leaving a polynomial in the inner one.
Poly eval_outer(const BiPoly& p, const Rational& v);

/// Converts a polynomial over Q(c) whose coefficients are polynomials.
BiPoly to_bipoly(const Polynomial<RatFunc>& p);

/// Partial derivative in the outer variable.
BiPoly outer_derivative(const BiPoly& p);

/// True iff every coefficient of every inner polynomial is >= 0 and at
/// least one is > 0.
bool all_coefficients_nonnegative(const BiPoly& p);

}  // namespace joincert

#endif  // JOINCERT_EXACTALG_HPP
