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

#include "joincert/fiberjoin.hpp"

#include <algorithm>
#include <sstream>

#include "joincert/errors.hpp"

namespace joincert {

namespace {

using Vec = std::vector<Rational>;

std::string pos_name(int j, int i) {
  return "K[" + std::to_string(j) + "][" + std::to_string(i) + "]";
}

bool is_half_odd(const Rational& r) { return (r - Rational(1, 2)).is_integer(); }

bool is_even_integer(const Rational& r) {
  return r.is_integer() && mpz_even_p(r.num().get_mpz_t()) != 0;
}

Vec add(const Vec& a, const Vec& b, const Rational& sb) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sb * b[i];
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

// Solves sum_a y_a cols[a] = target on pivot rows; returns y and the residual.
std::pair<Vec, Vec> solve_on_pivots(const std::vector<Vec>& cols, const Vec& target) {
  const std::size_t n = target.size(), m = cols.size();
  // Augmented rows: n x (m + 1).
  std::vector<Vec> a(n, Vec(m + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = cols[c][r];
    a[r][m] = target[r];
  }
  std::vector<std::size_t> pivot_col_row(m, n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < m && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const Rational inv = a[row][c].inverse();
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k <= m; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col_row[c] = row++;
  }
  Vec y(m, Rational(0));
  for (std::size_t c = 0; c < m; ++c) {
    if (pivot_col_row[c] < n) y[c] = a[pivot_col_row[c]][m];
  }
  Vec residual = target;
  for (std::size_t c = 0; c < m; ++c) residual = add(residual, cols[c], -y[c]);
  return {y, residual};
}

Integer lcm_den(const Vec& v) {
  Integer l = 1;
  for (const Rational& r : v) l = l / gcd(l, r.den()) * r.den();
  return l;
}

Integer gcd_num(const Vec& v) {
  Integer g = 0;
  for (const Rational& r : v) g = gcd(g, r.num());
  return g;
}

}  // namespace

void AdmissibleData::check() const {
  auto check_one = [](const Rational& x, const Rational& n, const char* name) {
    if (!(x.abs() < Rational(1)) || x.is_zero()) {
      throw DomainError(std::string(name) + " must satisfy 0 < |x| < 1, got " + x.str());
    }
    if (!n.is_zero() && n * x < Rational(0)) {
      throw DomainError(std::string(name) + " and n must have the same sign");
    }
  };
  check_one(x1, n1, "x1");
  if (dim == Dimension::kDim7) check_one(x2, n2, "x2");
}

std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::kSurface:
      return "surface";
    case BaseKind::kSurfaceProduct:
      return "surface_product";
    case BaseKind::kCP1xCP1:
      return "cp1xcp1";
    case BaseKind::kPolystableRuled:
      return "polystable_ruled";
    case BaseKind::kExample38:
      return "example38";
    case BaseKind::kExample39:
      return "example39";
  }
  return "unknown";
}

BaseManifold BaseManifold::surface(long g) { return {BaseKind::kSurface, g, 0, DegreeParity::kEven}; }
BaseManifold BaseManifold::surface_product(long g1, long g2) {
  return {BaseKind::kSurfaceProduct, g1, g2, DegreeParity::kEven};
}
BaseManifold BaseManifold::cp1xcp1() { return {BaseKind::kCP1xCP1, 0, 0, DegreeParity::kEven}; }
BaseManifold BaseManifold::polystable_ruled(long g, DegreeParity parity) {
  return {BaseKind::kPolystableRuled, g, 0, parity};
}
BaseManifold BaseManifold::example38(long g) { return {BaseKind::kExample38, g, 0, DegreeParity::kEven}; }
BaseManifold BaseManifold::example39() { return {BaseKind::kExample39, 0, 0, DegreeParity::kEven}; }

std::vector<std::string> BaseManifold::h2_basis() const {
  switch (kind) {
    case BaseKind::kSurface:
      return {"omega_Sigma"};
    case BaseKind::kSurfaceProduct:
    case BaseKind::kCP1xCP1:
      return {"Omega_1", "Omega_2"};
    case BaseKind::kPolystableRuled:
      return {"Omega_1", "Omega_2"};  // Omega_1 = v/2, Omega_2 = f
    case BaseKind::kExample38:
      return {"gamma_1", "gamma_2", "delta"};
    case BaseKind::kExample39:
      return {"pi1*Omega_FS", "pi2*Omega_FS", "chi/2pi"};
  }
  return {};
}

std::vector<std::vector<Rational>> BaseManifold::intersection_form() const {
  switch (kind) {
    case BaseKind::kSurface:
      return {{Rational(1)}};
    case BaseKind::kSurfaceProduct:
    case BaseKind::kCP1xCP1:
    case BaseKind::kPolystableRuled:
      return {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    case BaseKind::kExample38:
      return {{Rational(0), Rational(1), Rational(1)},
              {Rational(1), Rational(0), Rational(1)},
              {Rational(1), Rational(1), Rational(2 - 2 * g1)}};
    case BaseKind::kExample39:
      return {};  // N is a threefold; no pairing on H^2 is catalogued
  }
  return {};
}

std::vector<long> BaseManifold::factor_genera() const {
  switch (kind) {
    case BaseKind::kSurface:
      return {g1};
    case BaseKind::kSurfaceProduct:
      return {g1, g2};
    case BaseKind::kCP1xCP1:
      return {0, 0};
    case BaseKind::kPolystableRuled:
      return {0, g1};
    default:
      return {};
  }
}

int BaseManifold::k_columns() const {
  switch (kind) {
    case BaseKind::kSurface:
      return 1;
    case BaseKind::kExample38:
    case BaseKind::kExample39:
      return 0;
    default:
      return 2;
  }
}

void BaseManifold::check() const {
  if (g1 < 0 || g2 < 0) throw SpecError("genus must be a nonnegative integer");
  if (kind == BaseKind::kPolystableRuled && g1 < 1) throw SpecError("polystable_ruled requires genus >= 1");
  if (kind == BaseKind::kExample38 && g1 < 2) throw SpecError("example38 requires genus >= 2");
}

std::pair<Vec, Vec> line_bundle_classes(const FiberJoinSpec& spec) {
  switch (spec.base.kind) {
    case BaseKind::kExample38: {
      // l_s = (s - 1)(gamma_1 + gamma_2) + delta; L1 = l_{g+2}, L2 = l_{g+1}.
      const Rational g(spec.base.g1);
      const auto l = [](const Rational& s) { return Vec{s - Rational(1), s - Rational(1), Rational(1)}; };
      return {l(g + Rational(2)), l(g + Rational(1))};
    }
    case BaseKind::kExample39:
      return {{Rational(6), Rational(6), Rational(2)}, {Rational(2), Rational(2), Rational(1)}};
    default:
      if (spec.K.size() != 2) throw SpecError("K must have two rows");
      return {spec.K[0], spec.K[1]};
  }
}

AdmissibleData validate(const FiberJoinSpec& spec) {
  const BaseManifold& base = spec.base;
  base.check();
  if (spec.d < 1) throw SpecError("d must be >= 1");
  const int cols = base.k_columns();
  if (cols == 0) {
    throw SpecError(to_string(base.kind) +
                    " is a catalogued admissibility fixture; it has no regular admissible data "
                    "(its regular quotient class is not admissible)");
  }
  if (spec.K.size() != 2) throw SpecError("K must have 2 rows (one per line bundle), got " +
                                          std::to_string(spec.K.size()));
  for (int j = 0; j < 2; ++j) {
    if (static_cast<int>(spec.K[j].size()) != cols) {
      throw SpecError("K row " + std::to_string(j) + " must have " + std::to_string(cols) +
                      " entries for base " + to_string(base.kind));
    }
    for (int i = 0; i < cols; ++i) {
      if (spec.K[j][i].sign() <= 0) throw SpecError(pos_name(j, i) + " must be positive");
    }
  }
  const bool odd = base.kind == BaseKind::kPolystableRuled && base.parity == DegreeParity::kOdd;
  for (int j = 0; j < 2; ++j) {
    if (!odd) {
      for (int i = 0; i < cols; ++i) {
        if (!spec.K[j][i].is_integer()) throw SpecError(pos_name(j, i) + " must be an integer");
      }
      continue;
    }
    const Rational& k1 = spec.K[j][0];
    const Rational& k2 = spec.K[j][1];
    const bool even_branch = is_even_integer(k1) && k2.is_integer();
    const bool odd_branch = k1.is_integer() && !is_even_integer(k1) && is_half_odd(k2) && k2 > Rational(1);
    if (!even_branch && !odd_branch) {
      throw SpecError("row " + std::to_string(j) +
                      " violates the odd-degree parity rule: need k^1 even with k^2 integer, or "
                      "k^1 odd with k^2 - 1/2 a positive integer");
    }
  }
  for (int i = 0; i < cols; ++i) {
    if (spec.K[0][i] == spec.K[1][i]) {
      throw SpecError("column " + std::to_string(i) +
                      " has k^i_1 = k^i_2: the regular quotient is a product, which is unsupported");
    }
  }

  AdmissibleData d;
  d.dim = cols == 1 ? Dimension::kDim5 : Dimension::kDim7;
  const auto genera = base.factor_genera();
  const auto basis = base.h2_basis();
  Rational n[2], x[2], s[2];
  for (int i = 0; i < cols; ++i) {
    n[i] = spec.K[0][i] - spec.K[1][i];
    x[i] = n[i] / (spec.K[0][i] + spec.K[1][i]);
    s[i] = Rational(2 * (1 - genera[i])) / n[i];
    d.class_terms.emplace_back(basis[i], spec.K[0][i] + spec.K[1][i]);
  }
  d.n1 = n[0];
  d.x1 = x[0];
  d.s1 = s[0];
  if (cols == 2) {
    d.n2 = n[1];
    d.x2 = x[1];
    d.s2 = s[1];
  }
  d.check();

  if (cols == 2) {
    const auto matches = [&](long a, long b) {
      return spec.K[0][0] == Rational(10 * a) && spec.K[0][1] == Rational(100 * b) &&
             spec.K[1][0] == Rational(2 * a) && spec.K[1][1] == Rational(b);
    };
    if (base.kind == BaseKind::kSurfaceProduct && base.g1 >= 1 && base.g2 >= 1 && matches(base.g1, base.g2)) {
      d.family = {TableFamily::Kind::kProductTemplate, base.g1, base.g2};
    } else if (base.kind == BaseKind::kPolystableRuled && matches(base.g1, base.g1)) {
      d.family = {TableFamily::Kind::kPolystableTemplate, base.g1, 0};
    }
  }
  return d;
}

std::pair<Integer, Integer> ray_to_weights(const Rational& c) {
  if (!(c.abs() < Rational(1))) throw DomainError("ray parameter must satisfy |c| < 1, got " + c.str());
  const Integer a = c.num(), b = c.den();
  const Integer g = gcd(b + a, b - a);
  return {(b + a) / g, (b - a) / g};
}

Rational weights_to_ray(const Integer& w1, const Integer& w2) {
  if (w1 <= 0 || w2 <= 0) throw DomainError("weights must be positive");
  if (gcd(w1, w2) != 1) throw DomainError("weights must be coprime");
  return Rational(w1 - w2, w1 + w2);
}

LogPairQuotient quasiregular_quotient(const FiberJoinSpec& spec, const Integer& w1, const Integer& w2) {
  validate(spec);
  weights_to_ray(w1, w2);
  LogPairQuotient q;
  q.w1 = w1;
  q.w2 = w2;
  const Rational W1(w1), W2(w2);
  const auto basis = spec.base.h2_basis();
  bool degenerate = false;
  for (std::size_t i = 0; i < spec.K[0].size(); ++i) {
    const Rational n = W2 * spec.K[0][i] - W1 * spec.K[1][i];
    q.bundle_degrees.push_back(n);
    q.kahler_class.emplace_back(basis[i], W2 * spec.K[0][i] + W1 * spec.K[1][i]);
    if (n.is_zero()) degenerate = true;
  }
  q.branch_weights = {Rational(1) - W1.inverse(), Rational(1) - W2.inverse()};
  if (degenerate) {
    q.degenerate_flag = "product with Hirzebruch orbifold";
  } else {
    for (std::size_t i = 0; i < spec.K[0].size(); ++i) {
      q.x.push_back(q.bundle_degrees[i] / q.kahler_class[i].second);
    }
  }
  return q;
}

ColinearityResult colinearity_check(const FiberJoinSpec& spec) {
  validate(spec);
  ColinearityResult r;
  const Vec& a = spec.K[0];
  const Vec& b = spec.K[1];
  r.det = a.size() == 1 ? Rational(0) : a[0] * b[1] - a[1] * b[0];
  r.colinear = r.det.is_zero();
  if (!r.colinear) return r;
  // Primitive integral vector along the rows.
  const Integer den = lcm_den(a);
  Vec scaled;
  for (const Rational& v : a) scaled.push_back(v * Rational(den));
  const Integer g = gcd_num(scaled);
  for (const Rational& v : scaled) r.omega_N.push_back(v / Rational(g));
  r.b1 = a[0] / r.omega_N[0];
  r.b2 = b[0] / r.omega_N[0];
  if (r.b1.is_integer() && r.b2.is_integer()) r.l = Rational(gcd(r.b1.num(), r.b2.num()));
  return r;
}

std::string to_string(AdmissibilityVerdict v) {
  switch (v) {
    case AdmissibilityVerdict::kStronglyAdmissible:
      return "strongly admissible";
    case AdmissibilityVerdict::kAdmissibleNotStrong:
      return "admissible but NOT strongly admissible";
    case AdmissibilityVerdict::kNotApplicable:
      return "not applicable";
  }
  return "unknown";
}

AdmissibilityReport strong_admissibility_check(const FiberJoinSpec& spec) {
  spec.base.check();
  if (spec.base.k_columns() > 0) validate(spec);
  AdmissibilityReport rep;
  rep.basis = spec.base.h2_basis();
  const auto [w1, w2] = line_bundle_classes(spec);
  const std::size_t n = rep.basis.size();

  // Catalogued directions of the CSC factors of N.
  std::vector<Vec> directions;
  if (spec.base.kind == BaseKind::kExample39) {
    directions.push_back({Rational(4), Rational(4), Rational(1)});
    rep.bott_matrix = std::vector<std::vector<long>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, -1, 1, 0}, {5, 3, 2, 1}};
  } else {
    const std::size_t factors = spec.base.kind == BaseKind::kExample38 ? 2 : n;
    for (std::size_t a = 0; a < factors; ++a) {
      Vec e(n, Rational(0));
      e[a] = Rational(1);
      directions.push_back(e);
    }
  }
  if (spec.base.kind == BaseKind::kExample38) {
    // l_s is ample iff s > g; both bundles here use s = g + 2 and s = g + 1.
    ensure(w1[0] + Rational(1) > Rational(spec.base.g1) && w2[0] + Rational(1) > Rational(spec.base.g1),
           "catalogued classes must be ample");
  }

  // Admissibility: omega_1 - omega_2 = sum eps_a Omega_a with Omega_a positive multiples.
  const Vec diff = add(w1, w2, Rational(-1));
  const auto [mu, diff_residual] = solve_on_pivots(directions, diff);
  if (!is_zero_vec(diff_residual) ||
      std::any_of(mu.begin(), mu.end(), [](const Rational& r) { return r.is_zero(); })) {
    rep.verdict = AdmissibilityVerdict::kNotApplicable;
    rep.explanation = "c1(L1) - c1(L2) is not a signed sum of the catalogued factor classes";
    return rep;
  }
  for (std::size_t a = 0; a < directions.size(); ++a) {
    rep.epsilons.push_back(mu[a].sign());
    Vec cls;
    for (const Rational& v : directions[a]) cls.push_back(mu[a].abs() * v);
    rep.factor_classes.push_back(cls);
  }

  rep.target = add(w1, w2, Rational(1));
  std::tie(rep.y, rep.residual) = solve_on_pivots(rep.factor_classes, rep.target);
  if (!is_zero_vec(rep.residual)) {
    rep.verdict = AdmissibilityVerdict::kAdmissibleNotStrong;
    std::ostringstream os;
    os << "[omega_1] + [omega_2] leaves a residual outside the span of the factor classes:";
    for (std::size_t i = 0; i < n; ++i) {
      if (!rep.residual[i].is_zero()) os << " " << rep.residual[i] << "*" << rep.basis[i];
    }
    rep.explanation = os.str();
    return rep;
  }
  for (std::size_t a = 0; a < rep.y.size(); ++a) {
    if (!(rep.y[a] > Rational(1))) {
      rep.verdict = AdmissibilityVerdict::kAdmissibleNotStrong;
      rep.explanation = "decomposition coefficient " + rep.y[a].str() + " gives |x| >= 1";
      return rep;
    }
    rep.x.push_back(Rational(rep.epsilons[a]) / rep.y[a]);
  }
  rep.verdict = AdmissibilityVerdict::kStronglyAdmissible;
  rep.explanation = "2 pi ([omega_1] + [omega_2]) + Xi is the admissible class with the listed x_a";
  return rep;
}

std::pair<Rational, Rational> InverseQuotientFamily::x_at(const Integer& k1, const Integer& k2) const {
  if (k1 < kmin1 || k2 < kmin2) throw DomainError("k outside the admissible range");
  return {Rational(n1, n1 + 2 * k1), Rational(n2, n2 + 2 * k2)};
}

InverseQuotientFamily inverse_quotient_classes(const Integer& n1, const Integer& n2) {
  if (n1 == 0 || n2 == 0) throw DomainError("n_i must be nonzero");
  InverseQuotientFamily f;
  f.n1 = n1;
  f.n2 = n2;
  f.kmin1 = n1 < 0 ? Integer(1 - n1) : Integer(1);
  f.kmin2 = n2 < 0 ? Integer(1 - n2) : Integer(1);
  return f;
}

namespace {

std::vector<Integer> divisors_signed(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != m) {
        out.push_back(m / d);
        out.push_back(-(m / d));
      }
    }
  }
  return out;
}

}  // namespace

LineIntersection intersect_line(const InverseQuotientFamily& fam, const Rational& A, const Rational& B,
                                const Rational& C) {
  LineIntersection r;
  const Rational n1(fam.n1), n2(fam.n2);
  // A n1 (n2 + 2k2) + B n2 (n1 + 2k1) + C (n1 + 2k1)(n2 + 2k2) = 0.
  Vec coeffs{Rational(4) * C, Rational(2) * n2 * (B + C), Rational(2) * n1 * (A + C), n1 * n2 * (A + B + C)};
  const Integer den = lcm_den(coeffs);
  Vec ints;
  for (const Rational& v : coeffs) ints.push_back(v * Rational(den));
  Integer g = gcd_num(ints);
  if (g == 0) g = 1;
  r.a = (ints[0] / Rational(g)).num();
  r.b = (ints[1] / Rational(g)).num();
  r.c = (ints[2] / Rational(g)).num();
  r.d = (ints[3] / Rational(g)).num();
  const auto in_range = [&](const Integer& k1, const Integer& k2) { return k1 >= fam.kmin1 && k2 >= fam.kmin2; };
  const auto family = [&r](Integer p1, Integer p2, Integer q1, Integer q2, std::string why) {
    r.kind = LineIntersection::Kind::kLinearFamily;
    r.base = {std::move(p1), std::move(p2)};
    r.direction = {std::move(q1), std::move(q2)};
    r.reason = std::move(why);
  };
  const auto empty = [&r](std::string why) {
    r.kind = LineIntersection::Kind::kEmpty;
    r.reason = std::move(why);
  };

  if (r.a == 0) {
    if (r.b == 0 && r.c == 0) {
      if (r.d == 0) {
        r.kind = LineIntersection::Kind::kEverything;
        r.reason = "every class lies on the line";
      } else {
        empty("the line equation reduces to a nonzero constant");
      }
      return r;
    }
    if (r.b == 0 || r.c == 0) {
      // One k is pinned: b k1 + d = 0 or c k2 + d = 0.
      const bool pin1 = r.c == 0;
      const Integer dv = pin1 ? r.b : r.c;
      if ((-r.d) % dv != 0) {
        empty("the pinned k is not an integer");
        return r;
      }
      const Integer k = -r.d / dv;
      if (k < (pin1 ? fam.kmin1 : fam.kmin2)) {
        empty("the pinned k = " + k.get_str() + " is out of range");
        return r;
      }
      if (pin1) {
        family(k, fam.kmin2, 0, 1, "k1 = " + k.get_str() + ", k2 free");
      } else {
        family(fam.kmin1, k, 1, 0, "k2 = " + k.get_str() + ", k1 free");
      }
      return r;
    }
    // b k1 + c k2 + d = 0: integral points step along (c, -b) / gcd.
    const Integer m = abs(r.c);
    std::optional<Integer> first;
    for (Integer k1 = fam.kmin1; k1 < fam.kmin1 + m; ++k1) {
      if ((r.b * k1 + r.d) % r.c == 0) {
        first = k1;
        break;
      }
    }
    if (!first) {
      empty("no k1 makes k2 integral");
      return r;
    }
    const Integer gg = gcd(abs(r.b), abs(r.c));
    Integer q1 = abs(r.c) / gg, q2 = -r.b / gg * (r.c > 0 ? 1 : -1);
    const auto k2_of = [&](const Integer& k1) -> Integer { return (-r.d - r.b * k1) / r.c; };
    std::string line = "k2 = (" + Integer(-r.b).get_str() + " k1 + " + Integer(-r.d).get_str() + ") / " + r.c.get_str();
    if (q2 >= 0) {
      Integer k1 = *first;
      while (!in_range(k1, k2_of(k1))) k1 += q1;
      family(k1, k2_of(k1), q1, q2, line);
      return r;
    }
    for (Integer k1 = *first; k2_of(k1) >= fam.kmin2; k1 += q1) r.points.emplace_back(k1, k2_of(k1));
    r.kind = r.points.empty() ? LineIntersection::Kind::kEmpty : LineIntersection::Kind::kFinite;
    r.reason = line + ", decreasing: finitely many points";
    return r;
  }
  // (a k1 + c)(a k2 + b) = b c - a d.
  const Integer rhs = r.b * r.c - r.a * r.d;
  if (rhs == 0) {
    if ((-r.c) % r.a == 0 && Integer(-r.c / r.a) >= fam.kmin1) {
      const Integer k1 = -r.c / r.a;
      family(k1, fam.kmin2, 0, 1, "k1 = " + k1.get_str() + ", k2 free");
    } else if ((-r.b) % r.a == 0 && Integer(-r.b / r.a) >= fam.kmin2) {
      const Integer k2 = -r.b / r.a;
      family(fam.kmin1, k2, 1, 0, "k2 = " + k2.get_str() + ", k1 free");
    } else {
      empty("degenerate hyperbola (a k1 + c)(a k2 + b) = 0 without admissible integer points");
    }
    return r;
  }
  for (const Integer& dv : divisors_signed(rhs)) {
    const Integer u = dv - r.c;
    const Integer v = rhs / dv - r.b;
    if (u % r.a != 0 || v % r.a != 0) continue;
    const Integer k1 = u / r.a, k2 = v / r.a;
    if (in_range(k1, k2)) r.points.emplace_back(k1, k2);
  }
  std::sort(r.points.begin(), r.points.end());
  r.kind = r.points.empty() ? LineIntersection::Kind::kEmpty : LineIntersection::Kind::kFinite;
  std::ostringstream os;
  os << "(" << r.a.get_str() << " k1 + " << r.c.get_str() << ")(" << r.a.get_str() << " k2 + " << r.b.get_str()
     << ") = " << rhs.get_str() << "; divisor enumeration gives " << r.points.size() << " admissible points";
  r.reason = os.str();
  return r;
}

PointLocation locate_point(const InverseQuotientFamily& fam, const Rational& x1, const Rational& x2) {
  PointLocation out;
  // x = n / (n + 2k)  <=>  k = n (1 - x) / (2 x).
  const auto solve = [](const Integer& n, const Rational& x) { return Rational(n) * (Rational(1) - x) / (Rational(2) * x); };
  if (x1.is_zero() || x2.is_zero()) {
    out.reason = "x must be nonzero";
    return out;
  }
  const Rational k1 = solve(fam.n1, x1), k2 = solve(fam.n2, x2);
  if (!k1.is_integer() || !k2.is_integer()) {
    out.reason = "out of range: k1 = " + k1.str() + ", k2 = " + k2.str() + " must be integers";
    return out;
  }
  if (k1.num() < fam.kmin1 || k2.num() < fam.kmin2) {
    out.reason = "out of range: k1 = " + k1.str() + ", k2 = " + k2.str() + " below the minimum";
    return out;
  }
  out.k = std::make_pair(k1.num(), k2.num());
  out.reason = "realized by k1 = " + k1.str() + ", k2 = " + k2.str();
  return out;
}

CohomologyReport cohomology(const FiberJoinSpec& spec) {
  const BaseManifold& base = spec.base;
  base.check();
  if (base.kind == BaseKind::kExample38 || base.kind == BaseKind::kExample39) {
    throw SpecError("cohomology is not catalogued for " + to_string(base.kind));
  }
  validate(spec);
  CohomologyReport rep;
  rep.d = spec.d;
  std::vector<long> b;
  switch (base.kind) {
    case BaseKind::kSurface:
      b = {1, 2 * base.g1, 1};
      break;
    case BaseKind::kSurfaceProduct:
    case BaseKind::kCP1xCP1:
      b = {1, 2 * base.g1 + 2 * base.g2, 4 * base.g1 * base.g2 + 2, 2 * base.g1 + 2 * base.g2, 1};
      break;
    case BaseKind::kPolystableRuled:
      b = {1, 2 * base.g1, 2, 2 * base.g1, 1};
      break;
    default:
      break;
  }
  rep.base_betti = b;
  const int top = static_cast<int>(b.size()) - 1;  // real dimension of N
  const int sphere = 2 * spec.d + 1;
  rep.total_dimension = top + sphere;
  rep.product = 2 * spec.d + 2 > top;
  bool euler_nonzero = false;
  if (!rep.product) {
    // 2d + 2 = 4 = top: the Euler class is c1(L1) c1(L2) in H^4(N) = Z.
    const auto form = base.intersection_form();
    Rational e(0);
    for (std::size_t i = 0; i < form.size(); ++i) {
      for (std::size_t j = 0; j < form.size(); ++j) e += spec.K[0][i] * form[i][j] * spec.K[1][j];
    }
    ensure(e.is_integer(), "Euler number must be an integer");
    rep.euler_number = e.num();
    euler_nonzero = e.sign() != 0;
  }
  const auto betti = [&](int k) { return k >= 0 && k <= top ? b[static_cast<std::size_t>(k)] : 0L; };
  for (int k = 0; k <= rep.total_dimension; ++k) {
    CohomologyGroup g;
    g.degree = k;
    // coker(e: H^{k-2d-2}(N) -> H^k(N)) plus ker(e: H^{k-2d-1}(N) -> H^{k+1}(N)).
    if (euler_nonzero && k == top) {
      g.free_rank = betti(k) - 1;
      const Integer order = abs(rep.euler_number);
      if (order > 1) g.torsion.push_back(order);
    } else {
      g.free_rank = betti(k);
    }
    const int j = k - sphere;
    if (!(euler_nonzero && j == 0)) g.free_rank += betti(j);
    rep.groups.push_back(g);
  }
  return rep;
}

}  // namespace joincert
