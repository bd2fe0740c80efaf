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

#include "joincert/cscsolver.hpp"

#include "joincert/errors.hpp"
#include "joincert/extremality.hpp"
#include "joincert/moments.hpp"
#include "joincert/ratfunc.hpp"

namespace joincert {

namespace {

Poly from_coeffs(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }

Poly one_minus_c2() { return from_coeffs({1, 0, -1}); }

BiPoly scale_inner(const BiPoly& p, const Poly& f) {
  std::vector<Poly> out;
  for (const Poly& q : p.coeffs()) out.push_back(q * f);
  return BiPoly(std::move(out));
}

bool nonvanishing_on(const Poly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (p(lo).is_zero() || p(hi).is_zero()) return false;
  return sturm_count(p, lo, hi) == 0;
}

Rational k_at(const KMatrix& K, int i, int j) {
  return K.at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(i - 1));
}

void check_k(const KMatrix& K) {
  if (K.size() != 2 || K[0].size() != 2 || K[1].size() != 2) throw DomainError("K must be 2x2");
  for (const auto& row : K) {
    for (const Rational& v : row) {
      if (v.sign() <= 0) throw DomainError("K entries must be positive");
    }
  }
  if (K[0][0] == K[1][0] || K[0][1] == K[1][1]) throw DomainError("degenerate K: k^i_1 = k^i_2");
}

AdmissibleData cp1xcp1_data(const KMatrix& K) {
  AdmissibleData d;
  d.dim = Dimension::kDim7;
  d.n1 = k_at(K, 1, 1) - k_at(K, 1, 2);
  d.n2 = k_at(K, 2, 1) - k_at(K, 2, 2);
  d.x1 = d.n1 / (k_at(K, 1, 1) + k_at(K, 1, 2));
  d.x2 = d.n2 / (k_at(K, 2, 1) + k_at(K, 2, 2));
  d.s1 = Rational(2) / d.n1;
  d.s2 = Rational(2) / d.n2;
  return d;
}

Polynomial<RatFunc> lift(const BiPoly& p) {
  std::vector<RatFunc> out;
  for (const Poly& q : p.coeffs()) out.emplace_back(q);
  return Polynomial<RatFunc>(std::move(out));
}

// Res_z(p, dp/dz) as a polynomial in c.
Poly z_discriminant(const BiPoly& p) {
  if (p.degree() < 2) return Poly(Rational(1));
  const Polynomial<RatFunc> q = lift(p);
  const RatFunc r = resultant(q, derivative(q));
  ensure(r.is_polynomial(), "z-resultant is not polynomial in c");
  return r.as_polynomial();
}

}  // namespace

std::string to_string(HProvenance p) {
  return p == HProvenance::kFromIntegrals ? "from-integrals" : "explicit-form";
}

Poly explicit_h_dim5(const Rational& x, const Rational& s) {
  const Rational one(1);
  return from_coeffs({x * (s * x - Rational(2)), Rational(5) + x * x - s * x, -x * (Rational(6) + s * x),
                      -(one - s * x - Rational(3) * x * x)});
}

Poly explicit_h_dim7(const Rational& x1, const Rational& x2, const Rational& s1, const Rational& s2) {
  const Rational p = x1 * x2;
  const Rational q1 = x1 * x1, q2 = x2 * x2;
  const Rational sx = s1 * x1 + s2 * x2;      // s1 x1 + s2 x2
  const Rational sxc = s1 * x2 + s2 * x1;     // s1 x2 + s2 x1
  const Rational sq = s1 * q1 + s2 * q2;      // s1 x1^2 + s2 x2^2
  const Rational ss = s1 + s2;
  const Rational c5 = Rational(3) * p * sxc - sx +
                      Rational(3) * (Rational(3) * p * p - q1 + Rational(2) * p - q2 + Rational(1));
  const Rational c4 = sq - Rational(3) * ss * p * p - Rational(4) * ss * p -
                      Rational(6) * (x1 + x2) * (Rational(4) * p + Rational(1));
  const Rational c3 = Rational(4) * ((sx - sxc) * p + sx + Rational(3) * p * (p + Rational(5)) +
                                     Rational(6) * (q1 + q2));
  const Rational c2 = Rational(4) * (ss * (p + Rational(1)) * p - sq -
                                     Rational(3) * (x1 + x2) * (Rational(2) * p + Rational(3)));
  const Rational c1 = sxc * p - sx * (Rational(4) * p + Rational(3)) +
                      Rational(3) * (p * p + q1 + q2 + Rational(10) * p + Rational(7));
  const Rational c0 = Rational(3) * sq - ss * p * p - Rational(6) * (x1 + x2);
  return from_coeffs({c0, c1, c2, c3, c4, c5});
}

Poly h_from_integrals(const AdmissibleData& d) {
  d.check();
  if (d.dim == Dimension::kDim5) {
    const RatFunc lhs = alpha_symbolic(IntegralSpec::dim5(1, 4, d.x1, d.s1)) *
                            beta_symbolic(IntegralSpec::dim5(0, 3, d.x1, d.s1)) -
                        alpha_symbolic(IntegralSpec::dim5(0, 4, d.x1, d.s1)) *
                            beta_symbolic(IntegralSpec::dim5(1, 3, d.x1, d.s1));
    const RatFunc h = RatFunc(Rational(3, 4) * pow(one_minus_c2(), 5)) * lhs;
    ensure(h.is_polynomial(), "dim5 CSC expression is not polynomial after clearing (1 - c^2)^5");
    return h.as_polynomial();
  }
  const auto a = [&](int r, int m) { return alpha_symbolic(IntegralSpec::dim7(r, m, d.x1, d.x2, d.s1, d.s2)); };
  const auto b = [&](int r, int m) { return beta_symbolic(IntegralSpec::dim7(r, m, d.x1, d.x2, d.s1, d.s2)); };
  const RatFunc lhs = a(1, 5) * b(0, 4) - a(0, 5) * b(1, 4);
  const RatFunc h = RatFunc(Rational(9, 4) * pow(one_minus_c2(), 7)) * lhs;
  ensure(h.is_polynomial(), "dim7 CSC expression is not polynomial after clearing (1 - c^2)^7");
  return h.as_polynomial();
}

CscPolynomial build_h(const AdmissibleData& d) {
  const Poly h = h_from_integrals(d);
  if (d.dim == Dimension::kDim5) {
    ensure(h == explicit_h_dim5(d.x1, d.s1), "dim5 h: integrals disagree with the explicit cubic");
    const Rational one(1);
    ensure(h(one) == Rational(4) * pow(one - d.x1, 2), "dim5 h(1) endpoint identity");
    ensure(h(-one) == Rational(-4) * pow(one + d.x1, 2), "dim5 h(-1) endpoint identity");
  } else {
    ensure(h == explicit_h_dim7(d.x1, d.x2, d.s1, d.s2), "dim7 h: integrals disagree with the explicit quintic");
    const Rational one(1);
    ensure(h(one) == Rational(24) * pow(one - d.x1, 2) * pow(one - d.x2, 2), "dim7 h(1) endpoint identity");
    ensure(h(-one) == Rational(-24) * pow(one + d.x1, 2) * pow(one + d.x2, 2), "dim7 h(-1) endpoint identity");
  }
  return {h, d.dim, HProvenance::kFromIntegrals};
}

// ---------------------------------------------------------------------------

Dim5RootCertificate certify_positivity_at_root_dim5(const AdmissibleData& d, const Poly& h) {
  if (d.dim != Dimension::kDim5) throw DomainError("dim5 certificate requested for dim7 data");
  Dim5RootCertificate cert;
  cert.h = h;
  cert.x = d.x1;
  cert.h_at_x = h(d.x1);
  ensure(cert.h_at_x == Rational(3) * d.x1 * pow(Rational(1) - d.x1 * d.x1, 2), "h(x) = 3x(1-x^2)^2");
  ensure(!cert.h_at_x.is_zero(), "root at c = x");

  const Rational x = d.x1, one(1);
  cert.D = Rational(2) * from_coeffs({Rational(3) - x * x, Rational(-4) * x, Rational(3) * x * x - one});
  const Poly c = Poly::var();
  const Poly z0 = from_coeffs({one, -x});                       // 1 - c x
  const Poly z1 = c * z0 + from_coeffs({x, Rational(-1)});       // c (1 - c x) + (x - c)
  const Poly z2 = c * from_coeffs({x, Rational(-1)});            // c (x - c)
  const BiPoly factored({cert.D * z0, cert.D * z1, cert.D * z2});
  cert.difference = scale_inner(explicit_p_dim5_symbolic(d.x1, d.s1), one_minus_c2()) - factored;
  for (const Poly& coeff : cert.difference.coeffs()) {
    auto [q, r] = divrem(coeff, h);
    ensure(r.is_zero(), "dim5 elimination identity is not a multiple of h");
    cert.quotients.push_back(q);
  }
  auto pos = certify_positive(cert.D);
  ensure(std::holds_alternative<PositivityCertificate>(pos), "D(c) > 0 on (-1, 1)");
  cert.D_positive = std::get<PositivityCertificate>(pos);
  return cert;
}

bool verify(const Dim5RootCertificate& cert) {
  if (cert.h_at_x.is_zero() || cert.h(cert.x) != cert.h_at_x) return false;
  if (cert.quotients.size() != cert.difference.size()) return false;
  for (std::size_t k = 0; k < cert.quotients.size(); ++k) {
    if (cert.quotients[k] * cert.h != cert.difference.coeffs()[k]) return false;
  }
  return cert.D_positive.polynomial == cert.D && verify(cert.D_positive);
}

std::variant<RegionCertificate, RegionInconclusive> certify_positivity_at_root_dim7(
    const AdmissibleData& d, const Poly& h, const IsolatingInterval& root, int max_halvings) {
  if (d.dim != Dimension::kDim7) throw DomainError("region certificate requested for dim5 data");
  const SymbolicReduced sym = build_F_symbolic(d);
  const Poly disc = z_discriminant(sym.p);
  const Poly edge_minus = eval_outer(sym.p, Rational(-1));
  const Poly edge_plus = eval_outer(sym.p, Rational(1));
  IsolatingInterval iv = root;
  for (int k = 0; k <= max_halvings; ++k) {
    if (k > 0) iv = refine_root(h, iv, iv.width() / Rational(2));
    if (iv.exact) break;
    if (nonvanishing_on(disc, iv.lo, iv.hi) && nonvanishing_on(edge_minus, iv.lo, iv.hi) &&
        nonvanishing_on(edge_plus, iv.lo, iv.hi) && nonvanishing_on(sym.normalizer, iv.lo, iv.hi)) {
      RegionCertificate cert;
      cert.lo = iv.lo;
      cert.hi = iv.hi;
      cert.discriminant = disc;
      cert.edge_minus = edge_minus;
      cert.edge_plus = edge_plus;
      cert.normalizer = sym.normalizer;
      cert.mid = iv.midpoint();
      cert.at_mid = certify_positive(eval_inner(sym.p, cert.mid));
      cert.halvings = k;
      if (sym.normalizer(cert.mid).sign() < 0) {
        return RegionInconclusive{iv.lo, iv.hi, k, "normalizer is negative"};
      }
      return cert;
    }
  }
  return RegionInconclusive{iv.lo, iv.hi, max_halvings,
                            iv.exact ? "root is rational; decide it pointwise"
                                     : "discriminant or edge polynomial vanishes near the root"};
}

bool verify(const RegionCertificate& cert, const AdmissibleData& d) {
  const SymbolicReduced sym = build_F_symbolic(d);
  if (z_discriminant(sym.p) != cert.discriminant) return false;
  if (eval_outer(sym.p, Rational(-1)) != cert.edge_minus || eval_outer(sym.p, Rational(1)) != cert.edge_plus) {
    return false;
  }
  if (sym.normalizer != cert.normalizer || cert.normalizer(cert.mid).sign() <= 0) return false;
  if (!(cert.lo <= cert.mid && cert.mid <= cert.hi)) return false;
  for (const Poly* q : {&cert.discriminant, &cert.edge_minus, &cert.edge_plus, &cert.normalizer}) {
    if (!nonvanishing_on(*q, cert.lo, cert.hi)) return false;
  }
  const Poly at_mid = eval_inner(sym.p, cert.mid);
  if (const auto* pc = std::get_if<PositivityCertificate>(&cert.at_mid)) {
    return pc->polynomial == at_mid && verify(*pc);
  }
  const auto& ref = std::get<Refutation>(cert.at_mid);
  if (ref.point) return at_mid(*ref.point).sign() <= 0 && *ref.point > Rational(-1) && *ref.point < Rational(1);
  return ref.touching_root.has_value();
}

// ---------------------------------------------------------------------------

std::string CscRayCertificate::status() const {
  if (std::holds_alternative<RegionInconclusive>(evidence)) return "inconclusive";
  return certified() ? "csc ray" : "not extremal at the csc root";
}

bool CscRayCertificate::certified() const {
  if (std::holds_alternative<Dim5RootCertificate>(evidence)) return true;
  if (const auto* r = std::get_if<RegionCertificate>(&evidence)) return r->positive();
  if (const auto* e = std::get_if<ExactRootEvidence>(&evidence)) {
    return std::holds_alternative<PositivityCertificate>(e->positivity);
  }
  return false;
}

CscReport find_csc_rays(const AdmissibleData& d) {
  CscReport rep;
  rep.h = build_h(d);
  const Poly& h = rep.h.h;
  std::optional<Dim5RootCertificate> dim5;
  if (d.dim == Dimension::kDim5) dim5 = certify_positivity_at_root_dim5(d, h);
  for (const IsolatingInterval& iv : isolate_roots(h, Rational(-1), Rational(1))) {
    CscRayCertificate ray{iv, ExactRootEvidence{}, std::nullopt};
    const std::optional<Rational> exact = rational_root_in(h, iv);
    if (exact) ray.weights = ray_to_weights(*exact);
    if (dim5) {
      ray.evidence = *dim5;
    } else if (exact) {
      const RayVerdict v = is_extremal_ray({d, *exact});
      ray.evidence = ExactRootEvidence{*exact, v.positivity};
    } else {
      auto region = certify_positivity_at_root_dim7(d, h, iv);
      if (auto* rc = std::get_if<RegionCertificate>(&region)) {
        ray.evidence = std::move(*rc);
      } else {
        ray.evidence = std::get<RegionInconclusive>(region);
      }
    }
    rep.rays.push_back(std::move(ray));
  }
  return rep;
}

CscReport find_csc_rays(const FiberJoinSpec& spec) { return find_csc_rays(validate(spec)); }

// ---------------------------------------------------------------------------

Poly f_CR(const KMatrix& K) {
  check_k(K);
  const Rational a = k_at(K, 1, 1), b = k_at(K, 2, 1), d = k_at(K, 1, 2), e = k_at(K, 2, 2);
  const Poly cm = from_coeffs({-1, 1}), cp = from_coeffs({1, 1}), c = Poly::var();
  const auto pw = [](const Poly& p, unsigned n) { return pow(p, n); };
  Poly f = Rational(18) * a * b * d * e * c * pw(cm, 2) * pw(cp, 2);
  f += Rational(3) * a * a * b * b * pw(cm, 5);
  f += Rational(3) * d * d * e * e * pw(cp, 5);
  f += a * b * (a + b - Rational(3) * b * d - Rational(3) * a * e) * cp * pw(cm, 4);
  f += (b * b * d + a * a * e - Rational(4) * a * b * d - Rational(4) * a * b * e) * pw(cp, 2) * pw(cm, 3);
  f += (a * e * e + b * d * d - Rational(4) * b * d * e - Rational(4) * a * d * e) * pw(cp, 3) * pw(cm, 2);
  f += d * e * (d + e - Rational(3) * a * e - Rational(3) * b * d) * pw(cp, 4) * cm;
  return f;
}

Poly csc_weight_quintic(const KMatrix& K) {
  check_k(K);
  const Rational a = k_at(K, 1, 1), b = k_at(K, 2, 1), d = k_at(K, 1, 2), e = k_at(K, 2, 2);
  const Rational three(3), four(4), nine(9);
  return from_coeffs({
      three * a * a * b * b,
      a * b * (three * b * d + three * a * e - a - b),
      nine * a * b * d * e + b * b * d + a * a * e - four * a * b * e - four * a * b * d,
      four * a * d * e + four * b * d * e - nine * a * b * d * e - b * d * d - a * e * e,
      d * e * (d + e - three * b * d - three * a * e),
      -three * d * d * e * e,
  });
}

Rational eval_form(const Poly& form, int degree, const Integer& w1, const Integer& w2) {
  Rational acc(0);
  for (int j = 0; j <= degree; ++j) {
    acc += form.coeff(static_cast<std::size_t>(j)) * pow(Rational(w1), j) * pow(Rational(w2), degree - j);
  }
  return acc;
}

Rational csc_in_x(const Integer& w1, const Integer& w2, const Rational& n1, const Rational& n2, const Rational& x1,
                  const Rational& x2) {
  if (w1 <= 0 || w2 <= 0) throw DomainError("weights must be positive");
  if (n1.is_zero() || n2.is_zero()) throw DomainError("n_i must be nonzero");
  for (const auto& [n, x] : {std::pair{n1, x1}, std::pair{n2, x2}}) {
    if (x.is_zero() || x.abs() >= Rational(1)) throw DomainError("x_i must satisfy 0 < |x_i| < 1");
    if ((n * x).sign() <= 0) throw DomainError("x_i n_i must be positive");
  }
  const Rational W1(w1), W2(w2), dw = W1 - W2, sw = W1 + W2, ww4 = Rational(4) * W1 * W2;
  const Rational nn = n1 * n2;
  return Rational(9) * dw * nn - Rational(6) * sw * nn * (x1 + x2) + Rational(6) * dw * nn * x1 * x2 +
         Rational(3) * n2 * (ww4 - n1 * dw) * x1 * x1 + Rational(3) * n1 * (ww4 - n2 * dw) * x2 * x2 -
         (ww4 * (n1 + n2) - Rational(3) * dw * nn) * x1 * x1 * x2 * x2;
}

Poly csc_in_x_cleared(const KMatrix& K) {
  check_k(K);
  const Rational a = k_at(K, 1, 1), b = k_at(K, 2, 1), d = k_at(K, 1, 2), e = k_at(K, 2, 2);
  // w1 = t, w2 = 1.
  const Poly n1 = from_coeffs({a, -d}), D1 = from_coeffs({a, d});
  const Poly n2 = from_coeffs({b, -e}), D2 = from_coeffs({b, e});
  const Poly dw = from_coeffs({-1, 1}), sw = from_coeffs({1, 1}), ww4 = from_coeffs({0, 4});
  const Poly nn = n1 * n2;
  const Poly D1s = D1 * D1, D2s = D2 * D2;
  Poly r = Rational(9) * dw * nn * D1s * D2s;
  r -= Rational(6) * sw * nn * (n1 * D1 * D2s + n2 * D2 * D1s);
  r += Rational(6) * dw * nn * nn * D1 * D2;
  r += Rational(3) * n2 * (ww4 - n1 * dw) * n1 * n1 * D2s;
  r += Rational(3) * n1 * (ww4 - n2 * dw) * n2 * n2 * D1s;
  r -= (ww4 * (n1 + n2) - Rational(3) * dw * nn) * nn * nn;
  return r;
}

EquivalenceReport check_equivalence(const KMatrix& K) {
  EquivalenceReport rep;
  rep.f_cr = f_CR(K);
  rep.quintic = csc_weight_quintic(K);

  // (t + 1)^5 f((t - 1)/(t + 1)) with t = w1 / w2.
  Poly sub;
  const Poly tm = from_coeffs({-1, 1}), tp = from_coeffs({1, 1});
  for (int k = 0; k <= 5; ++k) {
    sub += rep.f_cr.coeff(static_cast<std::size_t>(k)) * pow(tm, static_cast<unsigned>(k)) *
           pow(tp, static_cast<unsigned>(5 - k));
  }
  rep.fcr_scale = sub.leading() / rep.quintic.leading();
  ensure(sub == rep.fcr_scale * rep.quintic, "f_CR substitution is not a multiple of the quintic");
  ensure(rep.fcr_scale == Rational(-32), "f_CR substitution scale is -32");

  rep.cleared = csc_in_x_cleared(K);
  auto [q, r] = divrem(rep.cleared, rep.quintic);
  ensure(r.is_zero(), "the cleared log-pair equation is not divisible by the quintic");
  rep.factor = q;
  const Rational a = k_at(K, 1, 1), b = k_at(K, 2, 1), d = k_at(K, 1, 2), e = k_at(K, 2, 2);
  ensure(q == Rational(-8) * from_coeffs({a, -d}) * from_coeffs({b, -e}), "cofactor is -8 n1(w) n2(w)");

  const AdmissibleData data = cp1xcp1_data(K);
  const Poly h = explicit_h_dim7(data.x1, data.x2, data.s1, data.s2);
  rep.h_scale = h.leading() / rep.f_cr.leading();
  ensure(h == rep.h_scale * rep.f_cr, "h is not a multiple of f_CR");
  rep.holds = true;
  return rep;
}

}  // namespace joincert
