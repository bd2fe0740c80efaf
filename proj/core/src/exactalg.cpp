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

#include "joincert/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace joincert {

namespace {

Poly linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

// Number of times (z - r) divides p.
int root_multiplicity(Poly p, const Rational& r) {
  int m = 0;
  const Poly f = linear(-r, Rational(1));
  while (!p.is_zero() && p(r).is_zero()) {
    p = exact_div(p, f);
    ++m;
  }
  return m;
}


}  // namespace

Poly poly_from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

Poly normalize_positive(const Poly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    const Integer n = c.num() * (den_lcm / c.den());
    num_gcd = gcd(num_gcd, n);
  }
  return Rational(den_lcm, num_gcd) * p;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != Rational(1)) os << a << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

int sign_at(const Poly& p, const Rational& x) { return p(x).sign(); }

int descartes_sign_changes(const Poly& p) {
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<SquareFreeFactor> square_free_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  const Poly f = monic(p);
  const Poly df = derivative(f);
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a);
  Poly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  return out;
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() <= 0) return normalize_positive(p);
  return normalize_positive(exact_div(p, gcd(p, derivative(p))));
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<Poly> seq{normalize_positive(p)};
  Poly next = normalize_positive(derivative(p));
  while (!next.is_zero()) {
    seq.push_back(next);
    const Poly& a = seq[seq.size() - 2];
    next = normalize_positive(-divrem(a, seq.back()).second);
  }
  return seq;
}

int sign_variations(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_variations_at_infinity(const std::vector<Poly>& seq, bool at_plus_infinity) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = q.leading().sign();
    if (!at_plus_infinity && q.degree() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("sturm_count of the zero polynomial");
  if (!(lo < hi)) throw DomainError("sturm_count requires lo < hi");
  if (p(lo).is_zero()) throw BoundaryRootError("polynomial vanishes at lower endpoint " + lo.str());
  if (p(hi).is_zero()) throw BoundaryRootError("polynomial vanishes at upper endpoint " + hi.str());
  const auto seq = sturm_sequence(square_free_part(p));
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int count_positive_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("count_positive_roots of the zero polynomial");
  if (p(Rational(0)).is_zero()) throw BoundaryRootError("polynomial vanishes at 0");
  const auto seq = sturm_sequence(square_free_part(p));
  return sign_variations(seq, Rational(0)) - sign_variations_at_infinity(seq, true);
}

namespace {

struct Isolator {
  const Poly& q;  // square-free
  std::vector<Poly> seq;
  Rational tol;
  std::vector<IsolatingInterval> out;

  int count(const Rational& a, const Rational& b) const {
    return sign_variations(seq, a) - sign_variations(seq, b);
  }

  // q(a), q(b) != 0 and exactly n roots in (a, b).
  void run(const Rational& a, const Rational& b, int n) {
    if (n == 0) return;
    if (n == 1 && b - a <= tol) {
      out.push_back({a, b, 1, std::nullopt});
      return;
    }
    const Rational m = (a + b) / Rational(2);
    if (!q(m).is_zero()) {
      const int left = count(a, m);
      run(a, m, left);
      run(m, b, n - left);
      return;
    }
    // Landed on a root: fence it off with a small symmetric interval.
    const Poly rest = exact_div(q, linear(-m, Rational(1)));
    Rational e = std::min(tol / Rational(4), (b - a) / Rational(4));
    for (;;) {
      const Rational l = m - e, h = m + e;
      if (!q(l).is_zero() && !q(h).is_zero() &&
          (rest.degree() < 1 || (!rest(l).is_zero() && !rest(h).is_zero() &&
                                 sturm_count(rest, l, h) == 0))) {
        break;
      }
      e /= Rational(2);
    }
    const Rational l = m - e, h = m + e;
    const int left = count(a, l);
    run(a, l, left);
    out.push_back({l, h, 1, m});
    run(h, b, n - 1 - left);
  }
};

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const Poly& p, const Rational& lo,
                                             const Rational& hi, const Rational& tolerance) {
  if (!(tolerance.sign() > 0)) throw DomainError("isolation tolerance must be positive");
  const int n = sturm_count(p, lo, hi);
  const Poly q = square_free_part(p);
  Isolator iso{q, sturm_sequence(q), tolerance, {}};
  iso.run(lo, hi, n);
  auto out = std::move(iso.out);
  // Multiplicity hints from the square-free decomposition.
  const auto factors = square_free_decomposition(p);
  for (auto& iv : out) {
    for (const auto& f : factors) {
      const bool here = iv.exact ? f.factor(*iv.exact).is_zero()
                                 : (f.factor.degree() > 0 && f.factor(iv.lo).sign() != 0 &&
                                    f.factor(iv.hi).sign() != 0 &&
                                    sturm_count(f.factor, iv.lo, iv.hi) == 1);
      if (here) {
        iv.multiplicity_hint = f.multiplicity;
        break;
      }
    }
  }
  return out;
}

IsolatingInterval refine_root(const Poly& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact) {
    if (iv.width() > width) {
      iv.lo = *iv.exact - width / Rational(2);
      iv.hi = *iv.exact + width / Rational(2);
    }
    return iv;
  }
  const Poly q = square_free_part(p);
  const auto seq = sturm_sequence(q);
  while (iv.width() > width) {
    const Rational m = iv.midpoint();
    const int s = q(m).sign();
    if (s == 0) {
      iv.exact = m;
      iv.lo = m - width / Rational(2);
      iv.hi = m + width / Rational(2);
      return iv;
    }
    if (sign_variations(seq, iv.lo) - sign_variations(seq, m) == 1) {
      iv.hi = m;
    } else {
      iv.lo = m;
    }
  }
  return iv;
}

std::optional<Rational> rational_root_in(const Poly& p, const IsolatingInterval& iv) {
  if (iv.exact) return iv.exact;
  const Poly q = normalize_positive(p);
  const Integer lc = abs(q.leading().num());
  const Rational bound(Integer(1), lc * lc * 2);
  const IsolatingInterval r = refine_root(p, iv, bound);
  if (r.exact) return r.exact;
  const Rational cand = simplest_between(r.lo, r.hi);
  if (q(cand).is_zero()) return cand;
  return std::nullopt;
}

Poly mobius_substitute(const Poly& p) {
  if (p.is_zero()) throw DomainError("mobius_substitute of the zero polynomial");
  const int n = p.degree();
  const Poly one_minus = linear(Rational(1), Rational(-1));
  const Poly one_plus = linear(Rational(1), Rational(1));
  Poly acc;
  for (int i = 0; i <= n; ++i) {
    const Rational& a = p.coeffs()[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    acc += a * (pow(one_minus, static_cast<unsigned>(i)) *
                pow(one_plus, static_cast<unsigned>(n - i)));
  }
  return acc;
}

std::string to_string(PositivityMethod m) {
  switch (m) {
    case PositivityMethod::kSturmRootCount:
      return "sturm-root-count";
    case PositivityMethod::kMobiusNonnegCoeffs:
      return "mobius-nonneg-coeffs";
    case PositivityMethod::kEndpointDeflation:
      return "endpoint-deflation";
  }
  return "unknown";
}

namespace {

bool nonneg_with_positive(const Poly& p) {
  bool positive = false;
  for (const auto& c : p.coeffs()) {
    if (c.sign() < 0) return false;
    if (c.sign() > 0) positive = true;
  }
  return positive;
}

Poly deflation_factor(const Rational& lo, const Rational& hi, int a, int b) {
  return pow(linear(-lo, Rational(1)), static_cast<unsigned>(a)) *
         pow(linear(hi, Rational(-1)), static_cast<unsigned>(b));
}

}  // namespace

std::optional<PositivityCertificate> certify_positive_mobius(const Poly& p) {
  if (p.is_zero()) throw DomainError("certify_positive of the zero polynomial");
  Poly t = mobius_substitute(p);
  if (!nonneg_with_positive(t)) return std::nullopt;
  PositivityCertificate cert;
  cert.polynomial = p;
  cert.lo = Rational(-1);
  cert.hi = Rational(1);
  cert.method = PositivityMethod::kMobiusNonnegCoeffs;
  cert.cofactor = p;
  cert.transformed = std::move(t);
  return cert;
}

PositivityResult certify_positive(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("certify_positive of the zero polynomial");
  if (!(lo < hi)) throw DomainError("certify_positive requires lo < hi");
  const int a = root_multiplicity(p, lo);
  const int b = root_multiplicity(p, hi);
  const Poly cofactor = exact_div(p, deflation_factor(lo, hi, a, b));
  const Poly sqf = square_free_part(cofactor);
  const auto roots = isolate_roots(cofactor, lo, hi, (hi - lo) / Rational(1024));

  if (roots.empty()) {
    const Rational sample = simplest_between(lo, hi);
    const Rational value = cofactor(sample);
    if (value.sign() > 0) {
      PositivityCertificate cert;
      cert.polynomial = p;
      cert.lo = lo;
      cert.hi = hi;
      cert.method = (a + b > 0) ? PositivityMethod::kEndpointDeflation
                                : PositivityMethod::kSturmRootCount;
      cert.lo_multiplicity = a;
      cert.hi_multiplicity = b;
      cert.cofactor = cofactor;
      cert.square_free = sqf;
      cert.sturm = sturm_sequence(sqf);
      cert.sample = sample;
      cert.sample_value = value;
      return cert;
    }
    return Refutation{sample, p(sample), std::nullopt};
  }

  // Sign is constant on each gap between isolating intervals.
  std::vector<std::pair<Rational, Rational>> gaps;
  Rational left = lo;
  for (const auto& iv : roots) {
    gaps.emplace_back(left, iv.lo);
    left = iv.hi;
  }
  gaps.emplace_back(left, hi);
  for (const auto& [g0, g1] : gaps) {
    if (!(g0 < g1)) continue;
    const Rational z = simplest_between(g0, g1);
    const Rational v = p(z);
    if (v.sign() <= 0) return Refutation{z, v, std::nullopt};
  }
  // Positive everywhere except at roots of even multiplicity.
  for (const auto& iv : roots) {
    if (auto r = rational_root_in(cofactor, iv)) return Refutation{*r, p(*r), std::nullopt};
  }
  return Refutation{std::nullopt, Rational(0), roots.front()};
}

bool verify(const PositivityCertificate& cert) {
  if (cert.polynomial.is_zero() || !(cert.lo < cert.hi)) return false;
  if (cert.method == PositivityMethod::kMobiusNonnegCoeffs) {
    return cert.lo == Rational(-1) && cert.hi == Rational(1) &&
           cert.transformed == mobius_substitute(cert.polynomial) &&
           nonneg_with_positive(cert.transformed);
  }
  if (cert.lo_multiplicity < 0 || cert.hi_multiplicity < 0) return false;
  if (cert.cofactor * deflation_factor(cert.lo, cert.hi, cert.lo_multiplicity,
                                       cert.hi_multiplicity) != cert.polynomial) {
    return false;
  }
  if (cert.cofactor(cert.lo).is_zero() || cert.cofactor(cert.hi).is_zero()) return false;
  if (cert.square_free != square_free_part(cert.cofactor)) return false;
  if (cert.sturm != sturm_sequence(cert.square_free)) return false;
  if (sign_variations(cert.sturm, cert.lo) != sign_variations(cert.sturm, cert.hi)) return false;
  if (!(cert.lo < cert.sample && cert.sample < cert.hi)) return false;
  const Rational v = cert.cofactor(cert.sample);
  return v == cert.sample_value && v.sign() > 0;
}

Poly eval_inner(const BiPoly& p, const Rational& v) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.push_back(q(v));
  return Poly(std::move(c));
}

Poly eval_outer(const BiPoly& p, const Rational& v) {
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = v * acc + *it;
  return acc;
}

BiPoly to_bipoly(const Polynomial<RatFunc>& p) {
  std::vector<Poly> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) c.push_back(q.as_polynomial());
  return BiPoly(std::move(c));
}

BiPoly outer_derivative(const BiPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Poly> c;
  for (std::size_t i = 1; i < p.size(); ++i) c.push_back(Rational(static_cast<long>(i)) * p.coeffs()[i]);
  return BiPoly(std::move(c));
}

bool all_coefficients_nonnegative(const BiPoly& p) {
  bool positive = false;
  for (const auto& q : p.coeffs()) {
    for (const auto& c : q.coeffs()) {
      if (c.sign() < 0) return false;
      if (c.sign() > 0) positive = true;
    }
  }
  return positive;
}

}  // namespace joincert
