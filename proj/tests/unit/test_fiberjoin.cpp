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

#include "joincert/errors.hpp"
#include "joincert/fiberjoin.hpp"
#include "joincert/spec_io.hpp"

using namespace joincert;

namespace {

FiberJoinSpec surface_spec(long g, long k1, long k2) {
  return {BaseManifold::surface(g), {{Rational(k1)}, {Rational(k2)}}, 1};
}

FiberJoinSpec product_spec(long g1, long g2, const KMatrix& k) { return {BaseManifold::surface_product(g1, g2), k, 1}; }

}  // namespace

TEST_CASE("validate a genus 2 surface join") {
  const AdmissibleData a = validate(surface_spec(2, 3, 1));
  CHECK(a.dim == Dimension::kDim5);
  CHECK(a.n1 == Rational(2));
  CHECK(a.x1 == Rational(1, 2));
  CHECK(a.s1 == Rational(-1));
}

TEST_CASE("validate rejections") {
  CHECK_THROWS_AS(validate(surface_spec(2, 0, 1)), SpecError);
  CHECK_THROWS_AS(validate(surface_spec(2, 2, 2)), SpecError);
  CHECK_THROWS_AS(validate({BaseManifold::surface(2), {{Rational(1, 2)}, {Rational(1)}}, 1}), SpecError);
  CHECK_THROWS_AS(validate(product_spec(1, 1, {{Rational(2)}, {Rational(1)}})), SpecError);
  CHECK_THROWS_AS(validate({BaseManifold::example39(), {}, 1}), SpecError);
}

TEST_CASE("polystable odd degree admits half-integer second column") {
  const FiberJoinSpec odd{BaseManifold::polystable_ruled(2, DegreeParity::kOdd),
                          {{Rational(3), Rational(5, 2)}, {Rational(1), Rational(3, 2)}},
                          1};
  const AdmissibleData a = validate(odd);
  CHECK(a.n1 == Rational(2));
  CHECK(a.n2 == Rational(1));
  CHECK(a.x2 == Rational(1, 4));
  CHECK(a.s1 == Rational(1));

  FiberJoinSpec even = odd;
  even.base.parity = DegreeParity::kEven;
  CHECK_THROWS_AS(validate(even), SpecError);
}

TEST_CASE("table families are detected") {
  const AdmissibleData p = validate(product_spec(2, 3, {{Rational(20), Rational(300)}, {Rational(4), Rational(3)}}));
  CHECK(p.family.kind == TableFamily::Kind::kProductTemplate);
  CHECK(p.family.g1 == 2);
  CHECK(p.family.g2 == 3);
  const AdmissibleData q = validate({BaseManifold::polystable_ruled(2, DegreeParity::kEven),
                                     {{Rational(20), Rational(200)}, {Rational(4), Rational(2)}},
                                     1});
  CHECK(q.family.kind == TableFamily::Kind::kPolystableTemplate);
}

TEST_CASE("ray and weight bijection") {
  CHECK(ray_to_weights(Rational(1, 3)) == std::pair<Integer, Integer>(2, 1));
  CHECK(ray_to_weights(Rational(0)) == std::pair<Integer, Integer>(1, 1));
  CHECK(weights_to_ray(2, 1) == Rational(1, 3));
  CHECK_THROWS_AS(weights_to_ray(2, 4), DomainError);
  CHECK_THROWS_AS(ray_to_weights(Rational(1)), DomainError);
  for (long a = -20; a <= 20; ++a) {
    const Rational c(a, 21);
    const auto [w1, w2] = ray_to_weights(c);
    CHECK(weights_to_ray(w1, w2) == c);
  }
  // c = x lands on the Sasaki-Seifert weights k / gcd.
  const auto [w1, w2] = ray_to_weights(Rational(1, 2));
  CHECK(w1 == 3);
  CHECK(w2 == 1);
}

TEST_CASE("regular quotient recovers the admissible data") {
  const FiberJoinSpec s = product_spec(1, 2, {{Rational(5), Rational(7)}, {Rational(2), Rational(3)}});
  const AdmissibleData a = validate(s);
  const LogPairQuotient q = quasiregular_quotient(s, 1, 1);
  REQUIRE(q.x.size() == 2);
  CHECK(q.x[0] == a.x1);
  CHECK(q.x[1] == a.x2);
  CHECK(q.branch_weights.first == Rational(0));
  CHECK(!q.degenerate_flag);

  const LogPairQuotient d = quasiregular_quotient(s, 5, 2);
  CHECK(d.degenerate_flag.has_value());
  CHECK(d.x.empty());

  const LogPairQuotient w = quasiregular_quotient(s, 3, 2);
  CHECK(w.bundle_degrees[0] == Rational(2 * 5 - 3 * 2));
  CHECK(w.branch_weights.first == Rational(2, 3));
  CHECK(w.x[0] == Rational(1, 4));
}

TEST_CASE("colinearity") {
  const ColinearityResult col = colinearity_check(product_spec(1, 1, {{Rational(4), Rational(6)}, {Rational(2), Rational(3)}}));
  CHECK(col.colinear);
  CHECK(col.b1 == Rational(2));
  CHECK(col.b2 == Rational(1));
  CHECK(col.det == Rational(0));
  const ColinearityResult non = colinearity_check(product_spec(1, 1, {{Rational(2), Rational(3)}, {Rational(1), Rational(2)}}));
  CHECK(!non.colinear);
  CHECK(non.det == Rational(1));
  CHECK(colinearity_check(surface_spec(3, 5, 2)).colinear);
}

TEST_CASE("strong admissibility") {
  const AdmissibilityReport prod =
      strong_admissibility_check(product_spec(1, 2, {{Rational(5), Rational(7)}, {Rational(2), Rational(3)}}));
  CHECK(prod.verdict == AdmissibilityVerdict::kStronglyAdmissible);
  REQUIRE(prod.x.size() == 2);
  CHECK(prod.x[0] == Rational(3, 7));
  CHECK(prod.x[1] == Rational(4, 10));

  const AdmissibilityReport ex38 = strong_admissibility_check({BaseManifold::example38(3), {}, 1});
  CHECK(ex38.verdict == AdmissibilityVerdict::kAdmissibleNotStrong);
  CHECK(ex38.residual == std::vector<Rational>{0, 0, 2});

  const AdmissibilityReport ex39 = strong_admissibility_check({BaseManifold::example39(), {}, 1});
  CHECK(ex39.verdict == AdmissibilityVerdict::kAdmissibleNotStrong);
  CHECK(ex39.residual == std::vector<Rational>{0, 0, 1});
  CHECK(ex39.bott_matrix.has_value());
}

TEST_CASE("inverse quotient on x2 = -x1") {
  const InverseQuotientFamily fam = inverse_quotient_classes(1, -1);
  CHECK(fam.kmin1 == 1);
  CHECK(fam.kmin2 == 2);
  const LineIntersection li = intersect_line(fam, 1, 1, 0);
  REQUIRE(li.kind == LineIntersection::Kind::kLinearFamily);
  CHECK(li.base == std::pair<Integer, Integer>(1, 2));
  CHECK(li.direction == std::pair<Integer, Integer>(1, 1));
  for (int t = 0; t < 10; ++t) {
    const Integer k1 = li.base.first + t * li.direction.first;
    const Integer k2 = li.base.second + t * li.direction.second;
    const auto [x1, x2] = fam.x_at(k1, k2);
    CHECK(x2 == -x1);
  }
}

TEST_CASE("inverse quotient on x2 = x1 - 1 is empty") {
  const InverseQuotientFamily fam = inverse_quotient_classes(1, -1);
  const LineIntersection li = intersect_line(fam, 1, -1, -1);
  CHECK(li.kind == LineIntersection::Kind::kEmpty);
  CHECK(!li.reason.empty());
}

TEST_CASE("inverse quotient point location") {
  const InverseQuotientFamily fam = inverse_quotient_classes(1, -1);
  const PointLocation hit = locate_point(fam, Rational(1, 3), Rational(-1, 3));
  REQUIRE(hit.k.has_value());
  CHECK(hit.k->first == 1);
  CHECK(hit.k->second == 2);
  const PointLocation miss = locate_point(fam, Rational(1, 2), Rational(-1, 2));
  CHECK(!miss.k.has_value());
  CHECK(!miss.reason.empty());
}

TEST_CASE("cohomology of a genus (1,1) join") {
  const CohomologyReport r = cohomology(product_spec(1, 1, {{Rational(2), Rational(3)}, {Rational(1), Rational(2)}}));
  CHECK(r.total_dimension == 7);
  CHECK(r.euler_number == 7);
  CHECK(!r.product);
  REQUIRE(r.groups.size() == 8);
  CHECK(r.groups[0].free_rank == 1);
  CHECK(r.groups[1].free_rank == 4);
  CHECK(r.groups[2].free_rank == 6);
  CHECK(r.groups[2].torsion.empty());
  CHECK(r.groups[4].free_rank == 4);
  CHECK(r.groups[4].torsion == std::vector<Integer>{7});
  CHECK(r.groups[7].free_rank == 1);
}

TEST_CASE("cohomology of a surface join and the product range") {
  const CohomologyReport r = cohomology(surface_spec(2, 3, 1));
  // d = dim_C N: the Euler class lives above the top degree, so S^3 x Sigma_2.
  CHECK(r.total_dimension == 5);
  CHECK(r.product);
  CHECK(r.groups[1].free_rank == 4);
  CHECK(r.groups[2].free_rank == 1);
  CHECK(r.groups[3].free_rank == 1);
  CHECK(r.groups[4].free_rank == 4);

  FiberJoinSpec big = surface_spec(2, 3, 1);
  big.d = 2;
  const CohomologyReport p = cohomology(big);
  CHECK(p.product);
  CHECK(p.total_dimension == 7);
  // S^5 x Sigma_2
  CHECK(p.groups[5].free_rank == 1);
  CHECK(p.groups[6].free_rank == 4);
  CHECK(p.groups[7].free_rank == 1);
}

TEST_CASE("spec JSON round trip") {
  const std::string text = R"({"base": {"kind": "surface_product", "params": {"genus1": 1, "genus2": 2}},
 "K": [["5", "7"], ["2", "3"]]})";
  const FiberJoinSpec s = parse_spec(text);
  CHECK(s.base.kind == BaseKind::kSurfaceProduct);
  CHECK(s.K[1][1] == Rational(3));
  const FiberJoinSpec t = parse_spec(spec_to_json(s));
  CHECK(spec_to_json(t) == spec_to_json(s));
}

TEST_CASE("spec JSON errors carry line and column") {
  const std::string bad_entry = "{\n  \"base\": {\"kind\": \"surface\", \"params\": {\"genus\": 2}},\n  \"K\": [[\"3\"], [1]]\n}";
  try {
    parse_spec(bad_entry, "s.json");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).rfind("s.json:3:17:", 0) == 0);
  }
  const std::string unknown = "{\n\"base\": {\"kind\": \"torus\"},\n\"K\": [[\"3\"], [\"1\"]]}";
  try {
    parse_spec(unknown, "u.json");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).rfind("u.json:2:18:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_spec("{\"base\": {\"kind\": \"surface\", \"params\": {\"genus\": 2}}, \"K\": [[\"3\"], [\"1\"]], \"x\": 1}"),
                  SpecError);
  CHECK_THROWS_AS(parse_spec("{\"base\": "), SpecError);
  CHECK_THROWS_AS(parse_spec("{\"base\": {\"kind\": \"surface\", \"params\": {\"genus\": 2}}, \"K\": [[\"1\"], [\"1\"]]}"),
                  SpecError);
}

TEST_CASE("randomized fiber-join invariants") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<long> k(1, 40);
  std::uniform_int_distribution<long> genus(0, 5);
  int checked = 0;
  while (checked < 200) {
    const KMatrix K{{Rational(k(rng)), Rational(k(rng))}, {Rational(k(rng)), Rational(k(rng))}};
    if (K[0][0] == K[1][0] || K[0][1] == K[1][1]) continue;
    const FiberJoinSpec s = product_spec(genus(rng), genus(rng), K);
    const AdmissibleData a = validate(s);
    CHECK(a.x1 * a.n1 > Rational(0));
    CHECK(a.x2 * a.n2 > Rational(0));
    CHECK(a.x1.abs() < Rational(1));
    CHECK(a.x2.abs() < Rational(1));
    CHECK(cohomology(s).euler_number > 0);
    const LogPairQuotient q = quasiregular_quotient(s, 1, 1);
    CHECK(q.x == std::vector<Rational>{a.x1, a.x2});
    ++checked;
  }
  for (int t = 0; t < 50; ++t) {
    const long k1 = k(rng), k2 = k(rng);
    if (k1 == k2) continue;
    const FiberJoinSpec s = surface_spec(genus(rng), k1, k2);
    CHECK(colinearity_check(s).colinear);
    const AdmissibilityReport rep = strong_admissibility_check(s);
    CHECK(rep.verdict == AdmissibilityVerdict::kStronglyAdmissible);
    REQUIRE(rep.x.size() == 1);
    CHECK(rep.x[0] == validate(s).x1);
  }
}

TEST_CASE("cp1xcp1 rejects equal column entries") {
  CHECK_THROWS_AS(validate({BaseManifold::cp1xcp1(), {{Rational(2), Rational(3)}, {Rational(1), Rational(3)}}, 1}),
                  SpecError);
  CHECK_NOTHROW(validate({BaseManifold::cp1xcp1(), {{Rational(2), Rational(3)}, {Rational(1), Rational(1)}}, 1}));
}
