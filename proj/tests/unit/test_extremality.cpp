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

#include <doctest.h>

#include "joincert/errors.hpp"
#include "joincert/extremality.hpp"
#include "oracles.hpp"

using namespace joincert;

namespace {

AdmissibleData dim5_data(long g, long k1, long k2) {
  AdmissibleData d;
  d.dim = Dimension::kDim5;
  d.n1 = k1 - k2;
  d.x1 = Rational(k1 - k2, k1 + k2);
  d.s1 = Rational(2 * (1 - g), k1 - k2);
  return d;
}

AdmissibleData dim7_data(const Rational& s1_num, long k11, long k12, long k21, long k22, long g2) {
  AdmissibleData d;
  d.dim = Dimension::kDim7;
  d.n1 = k11 - k12;
  d.n2 = k21 - k22;
  d.x1 = Rational(k11 - k12, k11 + k12);
  d.x2 = Rational(k21 - k22, k21 + k22);
  d.s1 = s1_num / Rational(k11 - k12);
  d.s2 = Rational(2 * (1 - g2), k21 - k22);
  return d;
}

AdmissibleData product_data(long g1, long g2) {
  AdmissibleData d = dim7_data(Rational(2 * (1 - g1)), 10 * g1, 2 * g1, 100 * g2, g2, g2);
  d.family = {TableFamily::Kind::kProductTemplate, g1, g2};
  return d;
}

AdmissibleData polystable_data(long g) {
  AdmissibleData d = dim7_data(Rational(2), 10 * g, 2 * g, 100 * g, g, g);
  d.family = {TableFamily::Kind::kPolystableTemplate, g, 0};
  return d;
}

bool is_cert(const PositivityResult& r) { return std::holds_alternative<PositivityCertificate>(r); }

}  // namespace

TEST_CASE("A system residual vanishes") {
  for (const Rational& c : {Rational(0), Rational(1, 3), Rational(-7, 9)}) {
    const ExtremalityProblem pr{dim5_data(2, 2, 1), c};
    const auto [a1, a2] = solve_A_system(pr);
    const auto spec = [&](int r) { return IntegralSpec::dim5(r, 5, pr.data.x1, pr.data.s1); };
    const auto bspec = [&](int r) { return IntegralSpec::dim5(r, 3, pr.data.x1, pr.data.s1); };
    CHECK(alpha(spec(1), c) * a1 + alpha(spec(0), c) * a2 == Rational(2) * beta(bspec(0), c));
    CHECK(alpha(spec(2), c) * a1 + alpha(spec(1), c) * a2 == Rational(2) * beta(bspec(1), c));
  }
}

TEST_CASE("dim5 p matches the explicit form and known values") {
  const AdmissibleData d7 = dim5_data(7, 2, 1);
  const Rational c(-299, 301);
  const auto red = build_F({d7, c});
  CHECK(red.p(Rational(-1, 5)) == Rational(-7794656, 61155675));
  CHECK(red.u_power == 3);
  CHECK(red.scalar_prefactor.sign() > 0);
  CHECK(red.F == red.scalar_prefactor * (Poly{1, 0, -1} * red.p));

  const auto v = is_extremal_ray({d7, c});
  CHECK_FALSE(v.extremal);
  CHECK(v.verdict() == "not extremal, no extremal representative in this ray");
  CHECK(v.cross.form == "explicit-dim5");

  // g = 2, k = (2,1), c = 1/3.
  const auto r2 = build_F({dim5_data(2, 2, 1), Rational(1, 3)});
  CHECK(r2.p == explicit_p_dim5(Rational(1, 3), Rational(-2), Rational(1, 3)));
}

TEST_CASE("dim5 closed-form endpoint values and degree") {
  oracle::RandomRationals rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const long k2 = rng.integer(1, 6);
    const long k1 = k2 + rng.integer(1, 7);
    const long g = rng.integer(0, 9);
    const Rational c = rng.in_unit();
    const auto red = build_F({dim5_data(g, k1, k2), c});
    const Rational P = pow(Rational(1) - c, 2) * Rational(k1 * k1) + pow(Rational(1) + c, 2) * Rational(k2 * k2) +
                       Rational(4) * (Rational(1) - c * c) * Rational(k1 * k2);
    const Rational den = pow(Rational(k1 + k2), 3);
    CHECK(red.p(Rational(-1)) == Rational(8 * k2) * P / den);
    CHECK(red.p(Rational(1)) == Rational(8 * k1) * P / den);
    CHECK(red.p.degree() == (c == Rational(k1 - k2, k1 + k2) ? 1 : 2));
  }
}

TEST_CASE("dim5 colinear ray gives a linear p") {
  const AdmissibleData d = dim5_data(3, 3, 1);
  const auto v = is_extremal_ray({d, d.x1});
  CHECK(v.reduced.p.degree() == 1);
  CHECK(v.extremal);
}

TEST_CASE("dim5 swap symmetry") {
  oracle::RandomRationals rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const long k2 = rng.integer(1, 5);
    const long k1 = k2 + rng.integer(1, 5);
    const long g = rng.integer(0, 8);
    const Rational c = rng.in_unit();
    const Poly a = build_F({dim5_data(g, k1, k2), c}).p;
    const Poly b = build_F({dim5_data(g, k2, k1), -c}).p;
    CHECK(compose(b, Poly{Rational(0), Rational(-1)}) == a);
  }
}

TEST_CASE("per-ray verdicts") {
  oracle::RandomRationals rng(3);
  for (long k2 = 1; k2 <= 3; ++k2) {
    for (long k1 = k2 + 1; k1 <= k2 + 3; ++k1) {
      CHECK(is_extremal_ray({dim5_data(1, k1, k2), Rational(0)}).extremal);
      for (int i = 0; i < 4; ++i) {
        const long g = rng.integer(0, 1 + 3 * k2);
        const auto v = is_extremal_ray({dim5_data(g, k1, k2), rng.in_unit()});
        CHECK(v.extremal);
        CHECK(verify(std::get<PositivityCertificate>(v.positivity)));
      }
    }
  }
  CHECK_THROWS_AS(build_F({dim5_data(2, 2, 1), Rational(1)}), DomainError);
}

TEST_CASE("symbolic construction agrees with pointwise") {
  const AdmissibleData d = dim5_data(4, 3, 1);
  const auto sym = build_F_symbolic(d);
  CHECK(sym.p == explicit_p_dim5_symbolic(d.x1, d.s1));
  for (const Rational& c : {Rational(0), Rational(1, 2), Rational(-3, 7)}) {
    CHECK(eval_inner(sym.p, c) == build_F({d, c}).p);
    CHECK(sym.normalizer(c) == build_F({d, c}).normalizer);
  }
  const AdmissibleData e = product_data(2, 3);
  const auto sym7 = build_F_symbolic(e);
  for (const Rational& c : {Rational(0), Rational(2, 5)}) {
    CHECK(eval_inner(sym7.p, c) == build_F({e, c}).p);
  }
}

TEST_CASE("dim7 tables agree with the integral construction") {
  oracle::RandomRationals rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const long g1 = rng.integer(1, 6), g2 = rng.integer(1, 6);
    const Rational c = rng.in_unit();
    const AdmissibleData d = product_data(g1, g2);
    const auto red = build_F({d, c});
    CHECK(red.p.degree() == 3);
    const auto cc = cross_check(d, c, red.p);
    CHECK(cc.form == "product-table");
    CHECK(eval_inner(product_table_p(g1, g2), c)(Rational(1)) ==
          Rational(4000 * g1 * g2) * table_h0()(c));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const long g = rng.integer(1, 8);
    const Rational c = rng.in_unit();
    const AdmissibleData d = polystable_data(g);
    CHECK(cross_check(d, c, build_F({d, c}).p).form == "polystable-table");
  }
  // c = 0 with g1 = g2 = 2.
  const AdmissibleData d = product_data(2, 2);
  CHECK(cross_check(d, Rational(0), build_F({d, Rational(0)}).p).form == "product-table");
}

TEST_CASE("g1 = 1 tables agree with the reduced coefficients") {
  const Poly t21 = poly_from_ints({5671303, -12465928, 8863948, -2529108, 469713});
  const Poly t22 = poly_from_ints({515185, -1068076, 661802, -131428, 23509});
  const Poly t31 = poly_from_ints({35584455, -129799228, 179764056, -111588384, 26063877});
  const Poly t32 = poly_from_ints({44385009, -162147164, 224920554, -139837364, 32709909});
  for (long g2 = 1; g2 <= 4; ++g2) {
    const auto a = product_table_p(1, g2);
    const BiPoly shifted = compose(a, BiPoly{Poly(-1), Poly(1)});
    CHECK(shifted.coeff(1) == Rational(4) * (t21 + Rational(5 * (g2 - 2)) * t22));
    CHECK(shifted.coeff(2) == Rational(2) * (Rational(5) * t31 + Rational(2 * (g2 - 2)) * t32));
  }
}

TEST_CASE("whole cone, dim5") {
  for (long k2 = 1; k2 <= 3; ++k2) {
    for (long g = 0; g <= 1 + 3 * k2; ++g) {
      const auto r = certify_whole_cone(dim5_data(g, k2 + 1, k2));
      REQUIRE(std::holds_alternative<WholeConeCertificate>(r));
      const auto& cert = std::get<WholeConeCertificate>(r);
      CHECK(cert.method == ConeMethod::kMobiusBivariate);
      CHECK(verify(cert));
    }
  }
  // g = 5, 6 with k2 = 1: the row-wise argument is needed.
  for (long g : {5L, 6L}) {
    for (long k1 = 2; k1 <= 5; ++k1) {
      const auto r = certify_whole_cone(dim5_data(g, k1, 1));
      REQUIRE(std::holds_alternative<WholeConeCertificate>(r));
      const auto& cert = std::get<WholeConeCertificate>(r);
      CHECK(cert.method != ConeMethod::kMobiusBivariate);
      CHECK(verify(cert));
      // T(b, y) = 32 N(b, y) / (k1 + 1)^3.
      const Rational k(k1), lin(g == 5 ? 11 : 13), mid(g == 5 ? 1 : 2), low(g == 5 ? 4 : 5);
      const BiPoly y = BiPoly::var();
      const Poly b = Poly::var();
      BiPoly n = (k * k * (b * b)) * (BiPoly(Poly(k)) - Poly(mid) * y + y * y);
      n += (Rational(3) * k * k * b) * y + BiPoly(Rational(4) * k * k * b) +
           (Rational(4) * k * b) * (y * y) + (lin * k * b) * y + Poly(Rational(3) * k - low) * y +
           BiPoly(Poly(k)) + y * y;
      CHECK(cert.transformed == (Rational(32) / pow(Rational(k1 + 1), 3)) * n);
    }
  }
  const auto r = certify_whole_cone(dim5_data(7, 2, 1));
  REQUIRE(std::holds_alternative<ConeCounterexample>(r));
  const auto& cex = std::get<ConeCounterexample>(r);
  CHECK(cex.value.sign() <= 0);
  CHECK_FALSE(is_extremal_ray({dim5_data(7, 2, 1), cex.c}).extremal);
}

TEST_CASE("whole cone, dim7 templates") {
  for (long g1 = 1; g1 <= 3; ++g1) {
    const auto r = certify_whole_cone(product_data(g1, g1 + 1));
    REQUIRE(std::holds_alternative<WholeConeCertificate>(r));
    CHECK(verify(std::get<WholeConeCertificate>(r)));
    CHECK(std::get<WholeConeCertificate>(r).cross.form == "product-table");
  }
  const auto r = certify_whole_cone(polystable_data(3));
  REQUIRE(std::holds_alternative<WholeConeCertificate>(r));
  CHECK(verify(std::get<WholeConeCertificate>(r)));
}
