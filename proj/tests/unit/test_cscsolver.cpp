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

#include <random>

#include "joincert/cscsolver.hpp"
#include "joincert/errors.hpp"
#include "joincert/extremality.hpp"

using namespace joincert;

namespace {

FiberJoinSpec surface(long g, long k1, long k2) { return {BaseManifold::surface(g), {{Rational(k1)}, {Rational(k2)}}, 1}; }

FiberJoinSpec product(long g1, long g2, long a, long b, long d, long e) {
  return {BaseManifold::surface_product(g1, g2), {{Rational(a), Rational(b)}, {Rational(d), Rational(e)}}, 1};
}

FiberJoinSpec polystable(long g, long a, long b, long d, long e) {
  return {BaseManifold::polystable_ruled(g, DegreeParity::kEven),
          {{Rational(a), Rational(b)}, {Rational(d), Rational(e)}},
          1};
}

KMatrix k2x2(long a, long b, long d, long e) { return {{Rational(a), Rational(b)}, {Rational(d), Rational(e)}}; }

}  // namespace

TEST_CASE("dim5 h at c = 0 and endpoints") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(1, 99);
  for (int t = 0; t < 50; ++t) {
    const Rational x(num(rng), 100);
    const Rational s(num(rng) - 50, 7);
    AdmissibleData d;
    d.dim = Dimension::kDim5;
    d.n1 = 1;
    d.x1 = x;
    d.s1 = s;
    const CscPolynomial h = build_h(d);
    CHECK(h.h.degree() == 3);
    CHECK(h.h(Rational(0)) == x * (s * x - Rational(2)));
    CHECK(h.h(Rational(1)) == Rational(4) * pow(Rational(1) - x, 2));
    CHECK(h.h(Rational(-1)) == Rational(-4) * pow(Rational(1) + x, 2));
  }
}

TEST_CASE("dim7 h endpoints") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> k(1, 30);
  std::uniform_int_distribution<long> genus(0, 4);
  for (int t = 0; t < 30; ++t) {
    const long a = k(rng), b = k(rng), d = k(rng), e = k(rng);
    if (a == d || b == e) continue;
    const AdmissibleData data = validate(product(genus(rng), genus(rng), a, b, d, e));
    const Poly h = build_h(data).h;
    CHECK(h.degree() == 5);
    const Rational one(1);
    CHECK(h(one) == Rational(24) * pow(one - data.x1, 2) * pow(one - data.x2, 2));
    CHECK(h(-one) == Rational(-24) * pow(one + data.x1, 2) * pow(one + data.x2, 2));
  }
}

TEST_CASE("dim5 uniqueness and replayable certificates") {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<long> k(1, 25);
  std::uniform_int_distribution<long> genus(1, 12);
  int done = 0;
  while (done < 200) {
    long k1 = k(rng), k2 = k(rng);
    if (k1 == k2) continue;
    if (k1 < k2) std::swap(k1, k2);
    const AdmissibleData data = validate(surface(genus(rng), k1, k2));
    const CscReport rep = find_csc_rays(data);
    REQUIRE(rep.rays.size() == 1);
    CHECK(descartes_sign_changes(mobius_substitute(rep.h.h)) == 1);
    const auto* cert = std::get_if<Dim5RootCertificate>(&rep.rays[0].evidence);
    REQUIRE(cert != nullptr);
    CHECK(verify(*cert));
    CHECK(rep.rays[0].certified());
    ++done;
  }
}

TEST_CASE("dim5 genus 0 still has a csc ray") {
  const CscReport rep = find_csc_rays(validate(surface(0, 5, 2)));
  CHECK(!rep.rays.empty());
  for (const auto& r : rep.rays) CHECK(r.certified());
}

TEST_CASE("g = 1, k = (3, 1): certificate matches a dense sample") {
  const AdmissibleData data = validate(surface(1, 3, 1));
  const CscReport rep = find_csc_rays(data);
  REQUIRE(rep.rays.size() == 1);
  const IsolatingInterval iv = refine_root(rep.h.h, rep.rays[0].root, Rational::pow2(-60));
  const Rational c = iv.midpoint();
  const Poly p = build_F({data, c}).p;
  for (int i = -99; i <= 99; ++i) CHECK(p(Rational(i, 100)) > Rational(0));
}

TEST_CASE("swapping k1 and k2 mirrors the root") {
  const CscReport a = find_csc_rays(validate(surface(3, 5, 2)));
  const CscReport b = find_csc_rays(validate(surface(3, 2, 5)));
  REQUIRE(a.rays.size() == 1);
  REQUIRE(b.rays.size() == 1);
  const auto& ra = a.rays[0].root;
  const auto& rb = b.rays[0].root;
  CHECK(ra.lo < -rb.lo);
  CHECK(-rb.hi < ra.hi);
  CHECK(b.rays[0].certified());
}

TEST_CASE("the elimination identity fails off the root") {
  AdmissibleData data = validate(surface(2, 3, 1));
  const Poly wrong = explicit_h_dim5(data.x1, data.s1 + Rational(1));
  CHECK_THROWS_AS(certify_positivity_at_root_dim5(data, wrong), InvariantViolation);
}

TEST_CASE("dim7 product template g1 = g2 = 2 has a certified csc ray") {
  const AdmissibleData data = validate(product(2, 2, 20, 200, 4, 2));
  const CscReport rep = find_csc_rays(data);
  REQUIRE(!rep.rays.empty());
  bool any = false;
  for (const auto& ray : rep.rays) {
    any = any || ray.certified();
    if (const auto* rc = std::get_if<RegionCertificate>(&ray.evidence)) CHECK(verify(*rc, data));
  }
  CHECK(any);
}

TEST_CASE("dim7 polystable template g = 3 has a certified csc ray") {
  const AdmissibleData data = validate(polystable(3, 30, 300, 6, 3));
  const CscReport rep = find_csc_rays(data);
  REQUIRE(!rep.rays.empty());
  for (const auto& ray : rep.rays) {
    CHECK(ray.certified());
    if (const auto* rc = std::get_if<RegionCertificate>(&ray.evidence)) CHECK(verify(*rc, data));
  }
}

TEST_CASE("fixed K with large genus loses extremality") {
  const AdmissibleData data = validate(polystable(400, 20, 200, 4, 2));
  const RayVerdict at_zero = is_extremal_ray({data, Rational(0)});
  CHECK(!at_zero.extremal);
  CHECK(build_F({data, Rational(0)}).F(Rational(0)) < Rational(0));
}

TEST_CASE("f_CR, the quintic and the log-pair equation agree") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> k(1, 40);
  int done = 0;
  while (done < 50) {
    const long a = k(rng), b = k(rng), d = k(rng), e = k(rng);
    if (a == d || b == e) continue;
    const KMatrix K = k2x2(a, b, d, e);
    const EquivalenceReport rep = check_equivalence(K);
    CHECK(rep.holds);
    CHECK(rep.fcr_scale == Rational(-32));
    // Row swap with w1 <-> w2 negates the quintic.
    const Poly q = csc_weight_quintic(K);
    const Poly qs = csc_weight_quintic(k2x2(d, e, a, b));
    for (int j = 0; j <= 5; ++j) CHECK(qs.coeff(static_cast<std::size_t>(j)) == -q.coeff(static_cast<std::size_t>(5 - j)));
    // w = (1, 1) is c = 0.
    CHECK(eval_form(q, 5, 1, 1) * Rational(-32) == f_CR(K)(Rational(0)) * Rational(32));
    // Pointwise on coprime weights with nondegenerate quotients.
    for (long w1 = 1; w1 <= 4; ++w1) {
      for (long w2 = 1; w2 <= 4; ++w2) {
        if (gcd(Integer(w1), Integer(w2)) != 1) continue;
        const Rational n1 = Rational(w2 * a - w1 * d), n2 = Rational(w2 * b - w1 * e);
        if (n1.is_zero() || n2.is_zero()) continue;
        const Rational D1(w2 * a + w1 * d), D2(w2 * b + w1 * e);
        const Rational r = csc_in_x(w1, w2, n1, n2, n1 / D1, n2 / D2);
        CHECK(r * D1 * D1 * D2 * D2 == Rational(-8) * n1 * n2 * eval_form(q, 5, w1, w2));
      }
    }
    ++done;
  }
}

TEST_CASE("log-pair equation on the x2 = -x1 family at w = (1, 1)") {
  for (long k1 = 1; k1 < 20; ++k1) {
    const Rational x(1, 1 + 2 * k1);
    CHECK(csc_in_x(1, 1, 1, -1, x, -x) == Rational(0));
  }
  CHECK_THROWS_AS(csc_in_x(1, 1, 1, -1, Rational(1, 2), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(csc_in_x(1, 1, 0, 1, Rational(1, 2), Rational(1, 2)), DomainError);
}

TEST_CASE("rational roots map to weights") {
  // K = [[3, 1], [1, 3]]-type data are symmetric under c -> -c; c = 0 is then a root.
  const AdmissibleData data = validate({BaseManifold::cp1xcp1(), k2x2(3, 1, 1, 3), 1});
  const CscReport rep = find_csc_rays(data);
  bool found = false;
  for (const auto& ray : rep.rays) {
    if (ray.weights && *ray.weights == std::pair<Integer, Integer>(1, 1)) {
      found = true;
      CHECK(std::holds_alternative<ExactRootEvidence>(ray.evidence));
    }
  }
  CHECK(found);
}
