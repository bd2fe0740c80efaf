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

#include "joincert/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "joincert/errors.hpp"

namespace joincert {

namespace {

struct Exponents {
  int m_alpha;  // exponent in the alpha system
  int m_beta;   // exponent of the beta integrals; also the (cz+1) power
};

Exponents exponents(Dimension d) { return d == Dimension::kDim5 ? Exponents{5, 3} : Exponents{6, 4}; }

IntegralSpec spec_for(const AdmissibleData& d, int r, int m) {
  return d.dim == Dimension::kDim5 ? IntegralSpec::dim5(r, m, d.x1, d.s1)
                                   : IntegralSpec::dim7(r, m, d.x1, d.x2, d.s1, d.s2);
}

Rational alpha_k(const IntegralSpec& s, const Rational& c) { return alpha(s, c); }
RatFunc alpha_k(const IntegralSpec& s, const RatFunc&) { return alpha_symbolic(s); }
Rational beta_k(const IntegralSpec& s, const Rational& c) { return beta(s, c); }
RatFunc beta_k(const IntegralSpec& s, const RatFunc&) { return beta_symbolic(s); }

template <class K>
struct ASystem {
  K a0, a1, a2, b0, b1, det, A1, A2;
};

template <class K>
ASystem<K> a_system(const AdmissibleData& d, const K& c) {
  const auto [ma, mb] = exponents(d.dim);
  ASystem<K> s;
  s.a0 = alpha_k(spec_for(d, 0, ma), c);
  s.a1 = alpha_k(spec_for(d, 1, ma), c);
  s.a2 = alpha_k(spec_for(d, 2, ma), c);
  s.b0 = beta_k(spec_for(d, 0, mb), c);
  s.b1 = beta_k(spec_for(d, 1, mb), c);
  s.det = s.a1 * s.a1 - s.a0 * s.a2;
  ensure(!s.det.is_zero(), "singular alpha system");
  s.A1 = K(2) * (s.b0 * s.a1 - s.a0 * s.b1) / s.det;
  s.A2 = K(2) * (s.a1 * s.b1 - s.a2 * s.b0) / s.det;
  ensure(s.a1 * s.A1 + s.a0 * s.A2 == K(2) * s.b0 && s.a2 * s.A1 + s.a1 * s.A2 == K(2) * s.b1,
         "alpha system residual is not zero");
  return s;
}

Rational boundary_numerator(const AdmissibleData& d) {
  return d.dim == Dimension::kDim5 ? Rational(2) * (Rational(1) - d.x1)
                                   : Rational(2) * (Rational(1) - d.x1) * (Rational(1) - d.x2);
}

// Normalizer nu = kappa * (-det) * (1 - c^2)^(2 (m_alpha - 2)).
template <class K>
K normalizer_of(const AdmissibleData& d, const K& c, const K& det) {
  const auto [ma, mb] = exponents(d.dim);
  (void)mb;
  const Rational kappa = d.dim == Dimension::kDim5 ? Rational(9, 2) : Rational(1);
  return K(kappa) * (K(0) - det) * ipow(K(1) - c * c, 2 * (ma - 2));
}

// (cz+1)^k times the bracket, for c != 0, via the substitution u = 1 + ct.
template <class K>
Polynomial<K> build_F_laurent(const AdmissibleData& d, const K& c, const ASystem<K>& s) {
  const auto [ma, mb] = exponents(d.dim);
  const Poly wa = alpha_weight(spec_for(d, 0, ma));
  const Poly wb = beta_weight(spec_for(d, 0, mb));

  // Q(u) as a Laurent polynomial: exponent -> coefficient.
  std::map<int, K> q;
  auto add = [&q](const Polynomial<K>& num, int shift, const K& scale) {
    for (std::size_t i = 0; i < num.size(); ++i) {
      const int e = static_cast<int>(i) - shift;
      auto it = q.try_emplace(e, K(0)).first;
      it->second = it->second + scale * num.coeff(i);
    }
  };
  add(in_u(wb, c), mb, K(2));
  add(in_u(Poly::var() * wa, c), ma, K(0) - s.A1);
  add(in_u(wa, c), ma, K(0) - s.A2);

  // Psi'' = Q.
  std::map<int, K> psi, dpsi;
  for (const auto& [j, qj] : q) {
    if (qj.is_zero()) continue;
    ensure(j != -1 && j != -2, "logarithmic term in the double antiderivative");
    psi[j + 2] = qj / K(Rational((j + 1) * (j + 2)));
    dpsi[j + 1] = qj / K(Rational(j + 1));
  }
  const K u0 = K(1) - c;
  K psi0(0), dpsi0(0);
  for (const auto& [e, v] : psi) psi0 = psi0 + v * ipow(u0, e);
  for (const auto& [e, v] : dpsi) dpsi0 = dpsi0 + v * ipow(u0, e);

  // G(U) = U^k [Psi(U) - Psi(u0) - Psi'(u0)(U - u0)] / c^2.
  const int k = mb;
  Polynomial<K> g;
  for (const auto& [e, v] : psi) {
    ensure(e + k >= 0, "negative power of (cz+1) survives in F");
    g += Polynomial<K>::monomial(v, static_cast<std::size_t>(e + k));
  }
  g += Polynomial<K>::monomial(dpsi0 * u0 - psi0, static_cast<std::size_t>(k));
  g -= Polynomial<K>::monomial(dpsi0, static_cast<std::size_t>(k + 1));
  g = (K(1) / (c * c)) * g;

  const Polynomial<K> u_of_z{K(1), c};
  Polynomial<K> f = compose(g, u_of_z);
  const K b = K(boundary_numerator(d)) * ipow(K(1) - c, -k);
  f += b * (pow(u_of_z, static_cast<unsigned>(k)) * Polynomial<K>{K(1), K(1)});
  return f;
}

Poly antiderivative(const Poly& p) {
  std::vector<Rational> out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p.coeff(i) / Rational(static_cast<long>(i + 1));
  return Poly(std::move(out));
}

// c = 0: u = 1, the bracket is a plain polynomial double integral.
Poly build_F_at_zero(const AdmissibleData& d, const ASystem<Rational>& s) {
  const auto [ma, mb] = exponents(d.dim);
  const Poly wa = alpha_weight(spec_for(d, 0, ma));
  const Poly wb = beta_weight(spec_for(d, 0, mb));
  const Poly q = Rational(2) * wb - Poly{s.A2, s.A1} * wa;
  const Poly dphi = antiderivative(q);
  const Poly phi = antiderivative(dphi);
  const Rational m1(-1);
  const Poly zp1{Rational(1), Rational(1)};
  return phi - Poly(phi(m1)) - dphi(m1) * zp1 + boundary_numerator(d) * zp1;
}

template <class K>
void check_endpoints(const Polynomial<K>& f) {
  ensure(f(K(1)).is_zero(), "F(1) != 0");
  ensure(f(K(-1)).is_zero(), "F(-1) != 0");
}

template <class K>
Polynomial<K> one_minus_z2() {
  return Polynomial<K>{K(1), K(0), K(-1)};
}

// Explicit dim5 form over any ring K holding c.
template <class K>
Polynomial<K> explicit_dim5(const Rational& x, const Rational& s, const K& c) {
  const K X(x), S(s), one(1);
  const K c2 = c * c, x2 = X * X, x3 = x2 * X;
  const K a0 = c2 * S * X + K(3) * c2 * x2 - c2 - K(2) * c * S * x2 + K(3) * c * x3 -
               K(7) * c * X + S * x3 - K(4) * x2 + K(6);
  const K a1 = K(2) * X * (K(3) * c2 * x2 - c2 - K(4) * c * X - x2 + K(3));
  const K a2 = (c - X) * (K(0) - c * S * X + K(3) * c * x2 - c + S * x2 - K(2) * X);
  return Polynomial<K>(std::vector<K>{a0, a1, a2});
}

Poly tbl(std::initializer_list<long> v) { return poly_from_ints(std::vector<long>(v)); }

// Coefficient tables, lowest degree in c first.
const Poly& H0() { static const Poly p = tbl({544829, -1814364, 2225984, -1185624, 229199}); return p; }

struct ProductTables {
  Poly h21, h22, h23, h24, h31, h32, h33, h34, h41, h42, h43, h44;
};
const ProductTables& product_tables() {
  static const ProductTables t{
      tbl({1849633, -3952908, 2583653, -545438, 68368}),
      tbl({5029446, -10073556, 5505031, -421486, -29519}),
      tbl({1085299, -2250304, 1327594, -148704, -11901}),
      tbl({2453521, -4733176, 2196021, 235654, -147064}),
      tbl({173925883, -629489348, 863749558, -530449308, 122385903}),
      tbl({86771822, -314540932, 432305747, -265928422, 61453077}),
      tbl({169929491, -609982556, 828678836, -502956696, 114452421}),
      tbl({42386813, -152393768, 207385193, -126091058, 28743168}),
      tbl({72852912, -233877440, 270006303, -130233426, 21229919}),
      tbl({365166252, -1171579852, 1351415507, -650974422, 105863967}),
      tbl({184191678, -594750598, 693107613, -339776268, 57173843}),
      tbl({184642524, -595846924, 693799609, -339679914, 57031029}),
  };
  return t;
}

struct PolystableTables {
  Poly h21, h22, h31, h32, h41, h42;
};
const PolystableTables& polystable_tables() {
  static const PolystableTables t{
      tbl({5793707, -13073132, 9976937, -3421902, 734322}),
      tbl({515185, -1068076, 661802, -131428, 23509}),
      tbl({181918667, -668502932, 933891002, -585434532, 138252867}),
      tbl({44385009, -162147164, 224920554, -139837364, 32709909}),
      tbl({356026968, -1129159208, 1277664093, -594396318, 89753413}),
      tbl({90261864, -287866464, 328807949, -155647254, 24416469}),
  };
  return t;
}

// sum_i a_i (1 + z)^i.
BiPoly from_one_plus_z_basis(const std::vector<Poly>& a) {
  const BiPoly one_plus_z{Poly(1), Poly(1)};
  BiPoly out, power(Poly(1));
  for (const Poly& ai : a) {
    out += ai * power;
    power = power * one_plus_z;
  }
  return out;
}

// Taylor coefficients at z = -1: p(z) = sum a_i (1 + z)^i.
std::vector<Poly> one_plus_z_coefficients(const BiPoly& p) {
  const BiPoly shifted = compose(p, BiPoly{Poly(-1), Poly(1)});
  return shifted.coeffs();
}

Poly binomial_row(int i, int n) {
  // (1 - v)^i (1 + v)^(n - i)
  return pow(Poly{Rational(1), Rational(-1)}, static_cast<unsigned>(i)) *
         pow(Poly{Rational(1), Rational(1)}, static_cast<unsigned>(n - i));
}

int inner_degree(const BiPoly& p) {
  int d = -1;
  for (const Poly& c : p.coeffs()) d = std::max(d, c.degree());
  return d;
}

PositivityCertificate require_certificate(const PositivityResult& r) { return std::get<PositivityCertificate>(r); }

std::optional<std::vector<PositivityCertificate>> certify_all(const std::vector<Poly>& polys) {
  std::vector<PositivityCertificate> out;
  for (const Poly& q : polys) {
    if (q.is_zero()) return std::nullopt;
    auto r = certify_positive(q);
    if (!std::holds_alternative<PositivityCertificate>(r)) return std::nullopt;
    out.push_back(std::get<PositivityCertificate>(std::move(r)));
  }
  return out;
}

// Nonzero rows of T in the chosen variable, each mapped from (0, inf) to (-1, 1).
std::vector<Poly> row_images(const BiPoly& t, bool rows_in_b) {
  const BiPoly rows = rows_in_b ? transpose(t) : t;
  std::vector<Poly> out;
  for (const Poly& r : rows.coeffs()) {
    if (!r.is_zero()) out.push_back(mobius_substitute(r));
  }
  return out;
}

std::vector<Poly> template_parts(const BiPoly& p) {
  std::vector<Poly> a = one_plus_z_coefficients(p);
  std::vector<Poly> parts(a.begin(), a.end() - 1);
  parts.push_back(eval_outer(p, Rational(1)));
  return parts;
}

std::vector<Rational> farey_interior(int order) {
  std::vector<Rational> out;
  for (long q = 1; q <= order; ++q) {
    for (long n = -q + 1; n < q; ++n) {
      if (std::gcd(n < 0 ? -n : n, q) == 1) out.emplace_back(n, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ConeCounterexample> grid_search(const BiPoly& p, int order) {
  const std::vector<Rational> pts = farey_interior(order);
  std::vector<double> zd(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) zd[i] = pts[i].to_double();
  const auto& a = p.coeffs();
  struct Cand {
    double v;
    std::size_t ci, zi;
  };
  std::vector<Cand> cands;
  std::vector<double> ad(a.size());
  for (std::size_t ci = 0; ci < pts.size(); ++ci) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      double acc = 0;
      const auto& cs = a[j].coeffs();
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * zd[ci] + it->to_double();
      ad[j] = acc;
    }
    double scale = 0;
    for (double v : ad) scale = std::max(scale, std::fabs(v));
    for (std::size_t zi = 0; zi < pts.size(); ++zi) {
      double acc = 0;
      for (auto it = ad.rbegin(); it != ad.rend(); ++it) acc = acc * zd[zi] + *it;
      if (acc <= 1e-9 * scale) cands.push_back({acc / (scale > 0 ? scale : 1), ci, zi});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) { return l.v < r.v; });
  if (cands.size() > 256) cands.resize(256);
  for (const Cand& cd : cands) {
    const Rational v = eval_inner(p, pts[cd.ci])(pts[cd.zi]);
    if (v.sign() <= 0) return ConeCounterexample{pts[cd.ci], pts[cd.zi], v, order};
  }
  return std::nullopt;
}

}  // namespace

void ExtremalityProblem::check() const {
  data.check();
  if (!(c.abs() < Rational(1))) throw DomainError("ray parameter c must satisfy |c| < 1, got " + c.str());
}

std::pair<Rational, Rational> solve_A_system(const ExtremalityProblem& problem) {
  problem.check();
  const auto s = a_system(problem.data, problem.c);
  return {s.A1, s.A2};
}

ReducedExtremalPoly build_F(const ExtremalityProblem& problem) {
  problem.check();
  const AdmissibleData& d = problem.data;
  const auto s = a_system(d, problem.c);
  ReducedExtremalPoly out;
  out.u_power = exponents(d.dim).m_beta;
  out.F = problem.c.is_zero() ? build_F_at_zero(d, s) : build_F_laurent(d, problem.c, s);
  check_endpoints(out.F);
  out.normalizer = normalizer_of(d, problem.c, s.det);
  ensure(out.normalizer.sign() > 0, "normalizer must be positive");
  out.scalar_prefactor = out.normalizer.inverse();
  out.p = out.normalizer * exact_div(out.F, one_minus_z2<Rational>());
  return out;
}

SymbolicReduced build_F_symbolic(const AdmissibleData& d) {
  d.check();
  const RatFunc c = RatFunc::var();
  const auto s = a_system(d, c);
  SymbolicReduced out;
  out.F = build_F_laurent(d, c, s);
  check_endpoints(out.F);
  const RatFunc nu = normalizer_of(d, c, s.det);
  out.normalizer = nu.as_polynomial();
  out.p = to_bipoly(nu * exact_div(out.F, one_minus_z2<RatFunc>()));
  return out;
}

Poly explicit_p_dim5(const Rational& x, const Rational& s, const Rational& c) {
  return explicit_dim5(x, s, c);
}

BiPoly explicit_p_dim5_symbolic(const Rational& x, const Rational& s) {
  return explicit_dim5<Poly>(x, s, Poly::var());
}

Poly table_h0() { return H0(); }

BiPoly product_table_p(long g1, long g2) {
  const auto& t = product_tables();
  const Rational a(g1 - 2), b(g2 - 2);
  const Poly h2 = Rational(6) * t.h21 + b * t.h22 + a * (Rational(5) * t.h23 + b * t.h24);
  const Poly h3 = Rational(2) * t.h31 + Rational(2) * b * t.h32 + a * (t.h33 + Rational(2) * b * t.h34);
  const Poly h4 = Rational(10) * t.h41 + b * t.h42 + a * (Rational(2) * t.h43 + b * t.h44);
  return from_one_plus_z_basis({Rational(8 * g1 * g2) * H0(), Rational(4) * h2, Rational(2) * h3, h4});
}

BiPoly polystable_table_p(long g) {
  const auto& t = polystable_tables();
  const Rational a(g - 2);
  return from_one_plus_z_basis({Rational(8 * g) * H0(), Rational(4) * t.h21 + Rational(20) * a * t.h22,
                                Rational(2) * t.h31 + Rational(4) * a * t.h32,
                                t.h41 + Rational(2) * a * t.h42});
}

std::optional<BiPoly> table_p(const AdmissibleData& data) {
  switch (data.family.kind) {
    case TableFamily::Kind::kProductTemplate:
      return product_table_p(data.family.g1, data.family.g2);
    case TableFamily::Kind::kPolystableTemplate:
      return polystable_table_p(data.family.g1);
    case TableFamily::Kind::kNone:
      break;
  }
  return std::nullopt;
}

namespace {

// 1212 g h0(c) / nu(c), with g = g1 g2 for the product template.
Rational table_scale(const AdmissibleData& d, const Rational& c, const Rational& nu) {
  const long g = d.family.kind == TableFamily::Kind::kProductTemplate ? d.family.g1 * d.family.g2
                                                                      : d.family.g1;
  return Rational(1212 * g) * H0()(c) / nu;
}

}  // namespace

CrossCheck cross_check(const AdmissibleData& data, const Rational& c, const Poly& p) {
  CrossCheck out;
  if (data.dim == Dimension::kDim5) {
    out.form = "explicit-dim5";
    ensure(explicit_p_dim5(data.x1, data.s1, c) == p, "integral p differs from the explicit dim5 form");
    return out;
  }
  const auto table = table_p(data);
  if (!table) return out;
  out.form = data.family.kind == TableFamily::Kind::kProductTemplate ? "product-table" : "polystable-table";
  const Rational nu = build_F({data, c}).normalizer;
  out.scale = table_scale(data, c, nu);
  ensure(eval_inner(*table, c) == out.scale * p, "integral p differs from the coefficient table");
  return out;
}

std::string RayVerdict::verdict() const {
  return extremal ? "extremal ray (up to isotopy)"
                  : "not extremal, no extremal representative in this ray";
}

RayVerdict is_extremal_ray(const ExtremalityProblem& problem) {
  RayVerdict out;
  out.c = problem.c;
  out.reduced = build_F(problem);
  out.cross = cross_check(problem.data, problem.c, out.reduced.p);
  if (out.reduced.p.is_zero()) {
    out.positivity = Refutation{Rational(0), Rational(0), std::nullopt};
  } else {
    out.positivity = certify_positive(out.reduced.p);
  }
  out.extremal = std::holds_alternative<PositivityCertificate>(out.positivity);
  return out;
}

std::string to_string(ConeMethod m) {
  switch (m) {
    case ConeMethod::kMobiusBivariate:
      return "mobius-bivariate-nonneg";
    case ConeMethod::kRowwise:
      return "rowwise-sturm";
    case ConeMethod::kEndpointTemplate:
      return "endpoint-template";
  }
  return "unknown";
}

BiPoly transpose(const BiPoly& p) {
  const int di = inner_degree(p);
  std::vector<Poly> out;
  for (int i = 0; i <= di; ++i) {
    std::vector<Rational> row;
    for (const Poly& c : p.coeffs()) row.push_back(c.coeff(static_cast<std::size_t>(i)));
    out.emplace_back(std::move(row));
  }
  return BiPoly(std::move(out));
}

BiPoly mobius_bivariate(const BiPoly& p) {
  const int dz = p.degree();
  const int dc = inner_degree(p);
  if (dz < 0) return {};
  // Inner variable: (1+b)^dc a((1-b)/(1+b)).
  std::vector<Poly> inner;
  for (const Poly& a : p.coeffs()) {
    Poly t;
    for (int i = 0; i <= a.degree(); ++i) t += a.coeff(static_cast<std::size_t>(i)) * binomial_row(i, dc);
    inner.push_back(t);
  }
  // Outer variable: (1+y)^dz sum_j A_j (1-y)^j (1+y)^(dz-j).
  BiPoly out;
  for (int j = 0; j <= dz; ++j) {
    const Poly row = binomial_row(j, dz);
    std::vector<Poly> coeffs;
    for (const Rational& r : row.coeffs()) coeffs.push_back(r * inner[static_cast<std::size_t>(j)]);
    out += BiPoly(std::move(coeffs));
  }
  return out;
}

WholeConeResult certify_whole_cone(const AdmissibleData& data) {
  WholeConeCertificate cert;
  const SymbolicReduced sym = build_F_symbolic(data);
  cert.p = sym.p;
  cert.normalizer = sym.normalizer;
  if (data.dim == Dimension::kDim5) {
    cert.cross.form = "explicit-dim5";
    ensure(explicit_p_dim5_symbolic(data.x1, data.s1) == sym.p,
           "integral p differs from the explicit dim5 form");
  } else if (const auto table = table_p(data)) {
    cert.cross.form =
        data.family.kind == TableFamily::Kind::kProductTemplate ? "product-table" : "polystable-table";
    const long g = data.family.kind == TableFamily::Kind::kProductTemplate ? data.family.g1 * data.family.g2
                                                                           : data.family.g1;
    // table = 1212 g h0 / nu * p, and nu is a constant multiple of h0.
    const Poly h0 = Rational(1212 * g) * H0();
    const Rational scale = h0.leading() / sym.normalizer.leading();
    ensure(scale * sym.normalizer == h0, "normalizer is not proportional to h0");
    cert.cross.scale = scale;
    ensure(*table == scale * sym.p, "integral p differs from the coefficient table");
  }
  {
    auto r = certify_positive(sym.normalizer);
    ensure(std::holds_alternative<PositivityCertificate>(r), "normalizer not positive on (-1,1)");
    cert.normalizer_positive = require_certificate(r);
  }
  cert.transformed = mobius_bivariate(sym.p);

  if (all_coefficients_nonnegative(cert.transformed)) {
    cert.method = ConeMethod::kMobiusBivariate;
    return cert;
  }
  if (sym.p.degree() >= 1 && sym.p.degree() <= 3) {
    if (auto parts = certify_all(template_parts(sym.p))) {
      cert.method = ConeMethod::kEndpointTemplate;
      cert.parts = std::move(*parts);
      return cert;
    }
  }
  for (bool in_b : {true, false}) {
    if (auto parts = certify_all(row_images(cert.transformed, in_b))) {
      cert.method = ConeMethod::kRowwise;
      cert.rows_in_b = in_b;
      cert.parts = std::move(*parts);
      return cert;
    }
  }
  for (int order : {64, 128}) {
    if (auto cex = grid_search(sym.p, order)) return *cex;
  }
  return ConeInconclusive{"sufficient conditions fail and the Farey grid of order 128 finds no ray with p <= 0"};
}

bool verify(const WholeConeCertificate& cert) {
  if (!verify(cert.normalizer_positive) || cert.normalizer_positive.polynomial != cert.normalizer) return false;
  if (cert.transformed != mobius_bivariate(cert.p)) return false;
  std::vector<Poly> expected;
  switch (cert.method) {
    case ConeMethod::kMobiusBivariate:
      return all_coefficients_nonnegative(cert.transformed);
    case ConeMethod::kEndpointTemplate:
      if (cert.p.degree() < 1 || cert.p.degree() > 3) return false;
      expected = template_parts(cert.p);
      break;
    case ConeMethod::kRowwise:
      expected = row_images(cert.transformed, cert.rows_in_b);
      if (expected.empty()) return false;
      break;
  }
  if (expected.size() != cert.parts.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (cert.parts[i].polynomial != expected[i] || !verify(cert.parts[i])) return false;
  }
  return true;
}

}  // namespace joincert
