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

// Acceptance suite. Each criterion prints one PASS/FAIL line with its
// runtime and budget; the exit status is nonzero if any criterion fails.
//
//   joincert_acceptance [N ...]   run only the listed criteria

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "joincert/cscsolver.hpp"
#include "joincert/errors.hpp"
#include "joincert/exactalg.hpp"
#include "joincert/extremality.hpp"
#include "joincert/fiberjoin.hpp"
#include "joincert/moments.hpp"
#include "oracles.hpp"

using namespace joincert;

namespace {

// Collects failed expectations; a criterion passes when none were recorded.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failed_ > 0) {
      os << ", " << failed_ << " failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    return os.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Expect&)> run;
};

Rational q(long a, long b = 1) { return Rational(a, b); }

FiberJoinSpec surface(long g, long k1, long k2) { return {BaseManifold::surface(g), {{q(k1)}, {q(k2)}}, 1}; }

KMatrix k2x2(long a, long b, long d, long e) { return {{q(a), q(b)}, {q(d), q(e)}}; }

FiberJoinSpec product(long g1, long g2, const KMatrix& k, int d = 1) {
  return {BaseManifold::surface_product(g1, g2), k, d};
}

KMatrix template_k(long g1, long g2) { return k2x2(10 * g1, 100 * g2, 2 * g1, g2); }

AdmissibleData dim5_point(const Rational& x, const Rational& s) {
  AdmissibleData d;
  d.dim = Dimension::kDim5;
  d.n1 = x.sign();
  d.x1 = x;
  d.s1 = s;
  return d;
}

AdmissibleData dim7_point(const Rational& x1, const Rational& x2, const Rational& s1, const Rational& s2) {
  AdmissibleData d;
  d.dim = Dimension::kDim7;
  d.n1 = x1.sign();
  d.n2 = x2.sign();
  d.x1 = x1;
  d.x2 = x2;
  d.s1 = s1;
  d.s2 = s2;
  return d;
}

Rational nonzero_unit(oracle::RandomRationals& rng) {
  for (;;) {
    const Rational x = rng.in_unit();
    if (!x.is_zero()) return x;
  }
}

// T(b, y) for g = 5, 6 and k2 = 1, up to the factor 32 / (k1 + 1)^3.
BiPoly displayed_numerator(long g, long k1) {
  const Rational k(k1), lin(g == 5 ? 11 : 13), mid(g == 5 ? 1 : 2), low(g == 5 ? 4 : 5);
  const BiPoly y = BiPoly::var();
  const Poly b = Poly::var();
  BiPoly n = (k * k * (b * b)) * (BiPoly(Poly(k)) - Poly(mid) * y + y * y);
  n += (Rational(3) * k * k * b) * y + BiPoly(Rational(4) * k * k * b) + (Rational(4) * k * b) * (y * y) +
       (lin * k * b) * y + Poly(Rational(3) * k - low) * y + BiPoly(Poly(k)) + y * y;
  return n;
}

// Whole cone plus at least one certified CSC ray.
void template_cell(Expect& expect, const FiberJoinSpec& spec, const std::string& label) {
  const AdmissibleData data = validate(spec);
  const WholeConeResult cone = certify_whole_cone(data);
  const auto* cert = std::get_if<WholeConeCertificate>(&cone);
  expect(cert != nullptr && verify(*cert), label + ": whole cone");
  const CscReport rep = find_csc_rays(data);
  long certified = 0;
  for (const auto& ray : rep.rays) {
    if (!ray.certified()) continue;
    bool replayed = true;
    if (const auto* rc = std::get_if<RegionCertificate>(&ray.evidence)) replayed = verify(*rc, data);
    if (replayed) ++certified;
  }
  expect(certified >= 1, label + ": certified csc ray");
}

// ---------------------------------------------------------------------------

void counterexample(Expect& expect) {
  const AdmissibleData data = validate(surface(7, 2, 1));
  const Rational c(-299, 301);
  const ReducedExtremalPoly red = build_F({data, c});
  expect(red.p(q(-1, 5)) == Rational(-7794656, 61155675), "p(-1/5) = -7794656/61155675");
  expect(red.F(q(-1, 5)).sign() < 0, "F(-1/5) < 0");
  const RayVerdict v = is_extremal_ray({data, c});
  expect(!v.extremal, "ray refuted");
  const auto* ref = std::get_if<Refutation>(&v.positivity);
  expect(ref != nullptr && ref->point && red.p(*ref->point) == ref->value && ref->value.sign() <= 0,
         "refutation point replays");
}

void endpoint_identities(Expect& expect) {
  oracle::RandomRationals rng(20260101);
  const Rational one(1);
  for (int i = 0; i < 100; ++i) {
    const Rational x = nonzero_unit(rng), s = rng.ratio(-40, 40, 9);
    const Poly h = h_from_integrals(dim5_point(x, s));
    expect(h(one) == Rational(4) * pow(one - x, 2), "dim5 h(1) at x = " + x.str());
    expect(h(-one) == Rational(-4) * pow(one + x, 2), "dim5 h(-1) at x = " + x.str());
  }
  for (int i = 0; i < 100; ++i) {
    const Rational x1 = nonzero_unit(rng), x2 = nonzero_unit(rng);
    const Rational s1 = rng.ratio(-40, 40, 9), s2 = rng.ratio(-40, 40, 9);
    const Poly h = h_from_integrals(dim7_point(x1, x2, s1, s2));
    expect(h(one) == Rational(24) * pow(one - x1, 2) * pow(one - x2, 2), "dim7 h(1)");
    expect(h(-one) == Rational(-24) * pow(one + x1, 2) * pow(one + x2, 2), "dim7 h(-1)");
  }
}

void double_construction(Expect& expect) {
  oracle::RandomRationals rng(314159);
  for (int i = 0; i < 20; ++i) {
    const Rational x = nonzero_unit(rng), s = rng.ratio(-40, 40, 9), c = rng.in_unit();
    const AdmissibleData d = dim5_point(x, s);
    expect(h_from_integrals(d) == explicit_h_dim5(x, s), "dim5 cubic h");
    expect(build_F({d, c}).p == explicit_p_dim5(x, s, c), "dim5 quadratic p");
  }
  for (int i = 0; i < 20; ++i) {
    const Rational x1 = nonzero_unit(rng), x2 = nonzero_unit(rng);
    const Rational s1 = rng.ratio(-40, 40, 9), s2 = rng.ratio(-40, 40, 9);
    expect(h_from_integrals(dim7_point(x1, x2, s1, s2)) == explicit_h_dim7(x1, x2, s1, s2), "dim7 quintic h");
  }
  // The tables equal 1212 g h0(c) F / (1 - z^2), with g = g1 g2 for the product.
  const auto table_matches = [&](const AdmissibleData& d, const BiPoly& table, long g, const Rational& c) {
    const ReducedExtremalPoly red = build_F({d, c});
    const Poly expected = (Rational(1212 * g) * table_h0()(c) * red.scalar_prefactor) * red.p;
    return eval_inner(table, c) == expected;
  };
  for (int i = 0; i < 20; ++i) {
    const long g1 = rng.integer(1, 8), g2 = rng.integer(1, 8);
    const Rational c = rng.in_unit();
    const AdmissibleData d = validate(product(g1, g2, template_k(g1, g2)));
    expect(table_matches(d, product_table_p(g1, g2), g1 * g2, c), "product table h0..h4");
  }
  for (int i = 0; i < 20; ++i) {
    const long g = rng.integer(1, 8);
    const Rational c = rng.in_unit();
    const FiberJoinSpec spec{BaseManifold::polystable_ruled(g, DegreeParity::kEven), template_k(g, g), 1};
    expect(table_matches(validate(spec), polystable_table_p(g), g, c), "polystable table h0..h4");
  }
}

void surface_scan(Expect& expect) {
  for (long g = 1; g <= 6; ++g) {
    for (long k1 = 2; k1 <= 12; ++k1) {
      for (long k2 = 1; k2 < k1; ++k2) {
        const std::string label = "g=" + std::to_string(g) + " k=(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
        const WholeConeResult r = certify_whole_cone(validate(surface(g, k1, k2)));
        const auto* cert = std::get_if<WholeConeCertificate>(&r);
        expect(cert != nullptr && verify(*cert), label);
        if (cert != nullptr && g >= 5 && k2 == 1) {
          expect(cert->method != ConeMethod::kMobiusBivariate, label + ": row-wise method");
          expect(cert->transformed == (Rational(32) / pow(q(k1 + 1), 3)) * displayed_numerator(g, k1),
                 label + ": displayed numerator");
        }
      }
    }
  }
}

void template_scans(Expect& expect) {
  for (long g1 = 1; g1 <= 4; ++g1) {
    for (long g2 = 1; g2 <= 4; ++g2) {
      template_cell(expect, product(g1, g2, template_k(g1, g2)),
                    "product g=(" + std::to_string(g1) + "," + std::to_string(g2) + ")");
    }
  }
  for (long g = 1; g <= 4; ++g) {
    template_cell(expect, {BaseManifold::polystable_ruled(g, DegreeParity::kEven), template_k(g, g), 1},
                  "polystable g=" + std::to_string(g));
  }
}

void dim5_uniqueness(Expect& expect) {
  oracle::RandomRationals rng(6);
  int done = 0;
  while (done < 200) {
    const long k1 = rng.integer(2, 40), k2 = rng.integer(1, 39), g = rng.integer(1, 30);
    if (k2 >= k1) continue;
    const AdmissibleData data = validate(surface(g, k1, k2));
    const CscReport rep = find_csc_rays(data);
    const std::string label = "g=" + std::to_string(g) + " k=(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    expect(rep.rays.size() == 1, label + ": one root");
    expect(sturm_count(rep.h.h, q(-1), q(1)) == 1, label + ": Sturm count");
    expect(descartes_sign_changes(mobius_substitute(rep.h.h)) == 1, label + ": Descartes");
    if (rep.rays.size() == 1) {
      const auto* cert = std::get_if<Dim5RootCertificate>(&rep.rays[0].evidence);
      expect(cert != nullptr && verify(*cert) && rep.rays[0].certified(), label + ": elimination certificate");
    }
    ++done;
  }
}

void equivalence(Expect& expect) {
  oracle::RandomRationals rng(77);
  int done = 0;
  while (done < 50) {
    const long a = rng.integer(1, 40), b = rng.integer(1, 40), d = rng.integer(1, 40), e = rng.integer(1, 40);
    if (a == d || b == e) continue;
    const EquivalenceReport rep = check_equivalence(k2x2(a, b, d, e));
    expect(rep.holds && !rep.factor.is_zero() && !rep.fcr_scale.is_zero() && !rep.h_scale.is_zero(),
           "K=[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(d) + "," +
               std::to_string(e) + "]]");
    expect(rep.cleared == rep.factor * rep.quintic, "cleared = factor * quintic");
    ++done;
  }
}

void oracle_suite(Expect& expect) {
  oracle::RandomRationals rng(1729);
  long log_assertions = 0;
  for (int i = 0; i < 200; ++i) {
    const IntegralSpec sa = oracle::random_alpha_spec(rng);
    const IntegralSpec sb = oracle::random_beta_spec(rng);
    const Rational c = rng.in_unit(97, 9, 10);
    try {
      expect(oracle::close(oracle::quad_alpha(sa, c.to_double()), alpha(sa, c)), "alpha vs quadrature");
      expect(oracle::close(oracle::quad_beta(sb, c.to_double()), beta(sb, c)), "beta vs quadrature");
    } catch (const InvariantViolation&) {
      ++log_assertions;
    }
  }
  expect(log_assertions == 0, "no-log assertion fired " + std::to_string(log_assertions) + " times");
  // The assertion is live: a bare 1/u term is refused.
  bool fired = false;
  try {
    moment_integral(Poly(q(1)), 1, q(1, 2));
  } catch (const InvariantViolation&) {
    fired = true;
  }
  expect(fired, "no-log assertion is armed");
}

void inverse_quotient(Expect& expect) {
  const InverseQuotientFamily fam = inverse_quotient_classes(1, -1);
  const LineIntersection anti = intersect_line(fam, 1, 1, 0);
  expect(anti.kind == LineIntersection::Kind::kLinearFamily, "x2 = -x1 is a linear family");
  expect(anti.base == std::pair<Integer, Integer>(1, 2) && anti.direction == std::pair<Integer, Integer>(1, 1),
         "k2 = k1 + 1 starting at k1 = 1");
  for (long k1 = 1; k1 <= 20; ++k1) {
    const auto [x1, x2] = fam.x_at(k1, k1 + 1);
    expect(x1 == q(1, 1 + 2 * k1) && x2 == -x1, "family point k1 = " + std::to_string(k1));
    expect(csc_in_x(1, 1, 1, -1, x1, x2).is_zero(), "csc at w = (1, 1), k1 = " + std::to_string(k1));
  }
  const LineIntersection shifted = intersect_line(fam, 1, -1, -1);
  expect(shifted.kind == LineIntersection::Kind::kEmpty && !shifted.reason.empty(), "x2 = x1 - 1 is empty");
  const PointLocation ks = locate_point(fam, q(1, 2), q(-1, 2));
  expect(!ks.k.has_value(), "(1/2, -1/2) is out of range");
}

// Ranks of H^p for the d = 1 total space over Sigma_g1 x Sigma_g2.
std::vector<long> seven_manifold_ranks(long g1, long g2) {
  const long odd = 2 * g1 + 2 * g2, even = 4 * g1 * g2 + 2;
  return {1, odd, even, odd, odd, even, odd, 1};
}

// Betti numbers of S^{2d+1} x Sigma_g1 x Sigma_g2.
std::vector<long> product_ranks(int d, long g1, long g2) {
  const std::vector<long> s1{1, 2 * g1, 1}, s2{1, 2 * g2, 1};
  std::vector<long> base(5, 0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) base[static_cast<std::size_t>(i + j)] += s1[static_cast<std::size_t>(i)] * s2[static_cast<std::size_t>(j)];
  }
  std::vector<long> out(static_cast<std::size_t>(2 * d + 6), 0);
  for (int p = 0; p < 5; ++p) {
    out[static_cast<std::size_t>(p)] += base[static_cast<std::size_t>(p)];
    out[static_cast<std::size_t>(p + 2 * d + 1)] += base[static_cast<std::size_t>(p)];
  }
  return out;
}

void cohomology_table(Expect& expect) {
  struct Case {
    long g1, g2, a, b, d, e;
  };
  const std::vector<Case> cases{{1, 1, 2, 3, 1, 2},  {1, 2, 5, 7, 2, 3},   {2, 2, 3, 1, 1, 4},  {0, 1, 4, 9, 1, 2},
                                {3, 1, 10, 100, 2, 1}, {2, 3, 6, 5, 1, 2},  {4, 4, 40, 400, 8, 4}, {1, 5, 7, 3, 2, 9},
                                {0, 0, 3, 2, 1, 5},  {5, 2, 11, 13, 17, 19}};
  for (const Case& k : cases) {
    const std::string label = "g=(" + std::to_string(k.g1) + "," + std::to_string(k.g2) + ") K=[[" +
                              std::to_string(k.a) + "," + std::to_string(k.b) + "],[" + std::to_string(k.d) + "," +
                              std::to_string(k.e) + "]]";
    const CohomologyReport r = cohomology(product(k.g1, k.g2, k2x2(k.a, k.b, k.d, k.e)));
    const long e = k.a * k.e + k.b * k.d;
    expect(r.euler_number == e, label + ": e");
    const auto ranks = seven_manifold_ranks(k.g1, k.g2);
    bool table = r.groups.size() == 8;
    for (std::size_t p = 0; table && p < 8; ++p) {
      table = r.groups[p].free_rank == ranks[p] &&
              r.groups[p].torsion == (p == 4 ? std::vector<Integer>{Integer(e)} : std::vector<Integer>{});
    }
    expect(table, label + ": H^p table");
    for (int d = 2; d <= 4; ++d) {
      const CohomologyReport big = cohomology(product(k.g1, k.g2, k2x2(k.a, k.b, k.d, k.e), d));
      const auto want = product_ranks(d, k.g1, k.g2);
      bool same = big.product && big.groups.size() == want.size();
      for (std::size_t p = 0; same && p < want.size(); ++p) {
        same = big.groups[p].free_rank == want[p] && big.groups[p].torsion.empty();
      }
      expect(same, label + ": product cohomology for d = " + std::to_string(d));
    }
  }
}

void strong_admissibility(Expect& expect) {
  for (long g : {2L, 3L, 5L}) {
    const AdmissibilityReport ex38 = strong_admissibility_check({BaseManifold::example38(g), {}, 1});
    expect(ex38.verdict == AdmissibilityVerdict::kAdmissibleNotStrong, "example 38 not strong");
    expect(ex38.residual.size() == 3 && ex38.residual[2] == q(2) && !ex38.explanation.empty(),
           "example 38 obstruction is 2 delta");
  }
  const AdmissibilityReport ex39 = strong_admissibility_check({BaseManifold::example39(), {}, 1});
  expect(ex39.verdict == AdmissibilityVerdict::kAdmissibleNotStrong, "example 39 not strong");
  expect(ex39.residual.size() == 3 && !ex39.residual[2].is_zero() && !ex39.explanation.empty(),
         "example 39 obstruction evidence");
  oracle::RandomRationals rng(38);
  int done = 0;
  while (done < 20) {
    const long a = rng.integer(1, 30), b = rng.integer(1, 30), d = rng.integer(1, 30), e = rng.integer(1, 30);
    if (a == d || b == e) continue;
    const AdmissibilityReport r =
        strong_admissibility_check({BaseManifold::cp1xcp1(), k2x2(a, b, d, e), 1});
    expect(r.verdict == AdmissibilityVerdict::kStronglyAdmissible, "cp1xcp1 strongly admissible");
    ++done;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "exact regression at g = 7, k = (2, 1), c = -299/301", 1, counterexample},
      {2, "endpoint identities of h", 10, endpoint_identities},
      {3, "integral and closed-form constructions agree", 30, double_construction},
      {4, "surface scan g <= 6, k1 <= 12: whole cone extremal", 120, surface_scan},
      {5, "product and polystable templates: whole cone and csc ray", 120, template_scans},
      {6, "dim5 csc uniqueness with elimination certificates", 60, dim5_uniqueness},
      {7, "weight quintic and log-pair equation agree", 30, equivalence},
      {8, "moment integrals against quadrature", 30, oracle_suite},
      {9, "inverse quotient for n = (1, -1)", 1, inverse_quotient},
      {10, "cohomology of the 7-dimensional joins", 1, cohomology_table},
      {11, "strong admissibility fixtures", 1, strong_admissibility},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Expect expect;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(expect);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool pass = error.empty() && expect.failed() == 0 && expect.checks() > 0 && in_budget;
    if (!pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, c.budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  [" << timing << "]  "
              << expect.summary();
    if (!error.empty()) std::cout << "; error: " << error;
    if (!in_budget) std::cout << "; over budget";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
