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

#ifndef JOINCERT_FIBERJOIN_HPP
#define JOINCERT_FIBERJOIN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "joincert/admissible.hpp"
#include "joincert/rational.hpp"

namespace joincert {

// ---------------------------------------------------------------------------
// Bases and specs

enum class BaseKind { kSurface, kSurfaceProduct, kCP1xCP1, kPolystableRuled, kExample38, kExample39 };

enum class DegreeParity { kEven, kOdd };

std::string to_string(BaseKind k);

struct BaseManifold {
  BaseKind kind = BaseKind::kSurface;
  long g1 = 0;  // Surface, PolystableRuled, Example38: the genus
  long g2 = 0;  // SurfaceProduct only
  DegreeParity parity = DegreeParity::kEven;  // PolystableRuled only

  static BaseManifold surface(long g);
  static BaseManifold surface_product(long g1, long g2);
  static BaseManifold cp1xcp1();
  static BaseManifold polystable_ruled(long g, DegreeParity parity);
  static BaseManifold example38(long g);
  static BaseManifold example39();

  /// Named basis of the catalogued part of H^2(N, Q).
  std::vector<std::string> h2_basis() const;
  /// Intersection (or pairing) numbers of the basis classes.
  std::vector<std::vector<Rational>> intersection_form() const;
  /// Genera of the product factors feeding s_i (CP1 counts as genus 0).
  std::vector<long> factor_genera() const;
  /// Number of K columns: 1 for a surface, 2 otherwise, 0 for fixtures.
  int k_columns() const;

  /// SpecError when the parameters are out of range.
  void check() const;
};

/// k^i_j at K[j-1][i-1]: rows are line bundles L_j, columns are basis classes.
using KMatrix = std::vector<std::vector<Rational>>;

struct FiberJoinSpec {
  BaseManifold base;
  KMatrix K;
  /// Fiber dimension parameter of S^{2d+1}; everything except cohomology
  /// requires d = 1.
  int d = 1;
};

/// The catalogued classes c_1(L_1), c_1(L_2) over base.h2_basis().
std::pair<std::vector<Rational>, std::vector<Rational>> line_bundle_classes(const FiberJoinSpec& spec);

/// Checks every invariant and returns the regular-quotient admissible data.
/// SpecError on any violation.
AdmissibleData validate(const FiberJoinSpec& spec);

// ---------------------------------------------------------------------------
// Rays

/// (w1, w2) coprime positive for rational c in (-1, 1).
std::pair<Integer, Integer> ray_to_weights(const Rational& c);
/// c = (w1 - w2) / (w1 + w2). DomainError unless w is coprime positive.
Rational weights_to_ray(const Integer& w1, const Integer& w2);

// ---------------------------------------------------------------------------
// Quasi-regular quotients

struct LogPairQuotient {
  Integer w1, w2;
  /// w2 k^i_1 - w1 k^i_2 per column.
  std::vector<Rational> bundle_degrees;
  /// Coefficients 1 - 1/w1 and 1 - 1/w2 of the branch divisor.
  std::pair<Rational, Rational> branch_weights;
  /// w2 [omega_1] + w1 [omega_2] over the basis (units of 2 pi), plus Xi.
  std::vector<std::pair<std::string, Rational>> kahler_class;
  Rational xi_coefficient = Rational(1);
  /// Set when some bundle degree vanishes.
  std::optional<std::string> degenerate_flag;
  /// x_i = n_i / (w2 k^i_1 + w1 k^i_2); empty when degenerate.
  std::vector<Rational> x;
};

LogPairQuotient quasiregular_quotient(const FiberJoinSpec& spec, const Integer& w1, const Integer& w2);

// ---------------------------------------------------------------------------
// Colinearity and admissibility

struct ColinearityResult {
  bool colinear = false;
  /// When colinear: omega_j = b_j omega_N with omega_N primitive.
  std::vector<Rational> omega_N;
  Rational b1, b2;
  Rational l;  // gcd(b1, b2) when both are integers
  Rational det;
};

ColinearityResult colinearity_check(const FiberJoinSpec& spec);

enum class AdmissibilityVerdict { kStronglyAdmissible, kAdmissibleNotStrong, kNotApplicable };

std::string to_string(AdmissibilityVerdict v);

struct AdmissibilityReport {
  AdmissibilityVerdict verdict = AdmissibilityVerdict::kNotApplicable;
  std::vector<std::string> basis;
  /// Factor classes Omega_{N_a} with signs epsilon_a: omega_1 - omega_2 = sum eps_a Omega_a.
  std::vector<std::vector<Rational>> factor_classes;
  std::vector<int> epsilons;
  /// [omega_1] + [omega_2] = sum y_a Omega_a + residual.
  std::vector<Rational> target;
  std::vector<Rational> y;
  std::vector<Rational> residual;
  /// x_a = eps_a / y_a when strongly admissible.
  std::vector<Rational> x;
  std::string explanation;
  /// Recorded only; not used in any computation.
  std::optional<std::vector<std::vector<long>>> bott_matrix;
};

AdmissibilityReport strong_admissibility_check(const FiberJoinSpec& spec);

// ---------------------------------------------------------------------------
// Inverse quotient

/// x_i = n_i / (n_i + 2 k^i) over integers k^i >= kmin_i = max(1, 1 - n_i).
struct InverseQuotientFamily {
  Integer n1, n2;
  Integer kmin1, kmin2;
  std::pair<Rational, Rational> x_at(const Integer& k1, const Integer& k2) const;
};

InverseQuotientFamily inverse_quotient_classes(const Integer& n1, const Integer& n2);

/// Integer points (k1, k2) of the family on the line A x1 + B x2 + C = 0,
/// i.e. of a k1 k2 + b k1 + c k2 + d = 0.
struct LineIntersection {
  Integer a, b, c, d;
  enum class Kind { kEmpty, kFinite, kLinearFamily, kEverything } kind = Kind::kEmpty;
  std::vector<std::pair<Integer, Integer>> points;  // kFinite
  /// kLinearFamily: (k1, k2) = base + t * direction, t = 0, 1, 2, ...
  std::pair<Integer, Integer> base, direction;
  std::string reason;
};

LineIntersection intersect_line(const InverseQuotientFamily& fam, const Rational& A, const Rational& B,
                                const Rational& C);

/// The (k1, k2) realizing a target point, or the reason it is out of range.
struct PointLocation {
  std::optional<std::pair<Integer, Integer>> k;
  std::string reason;
};

PointLocation locate_point(const InverseQuotientFamily& fam, const Rational& x1, const Rational& x2);

// ---------------------------------------------------------------------------
// Cohomology

struct CohomologyGroup {
  int degree = 0;
  long free_rank = 0;
  std::vector<Integer> torsion;  // orders of cyclic summands
};

struct CohomologyReport {
  int d = 1;
  int total_dimension = 0;
  /// True when d >= dim_C N and the groups are those of S^{2d+1} x N.
  bool product = false;
  Integer euler_number;  // e = <c1(L1) c1(L2), [N]> when relevant
  std::vector<CohomologyGroup> groups;
  std::vector<long> base_betti;
};

/// Gysin sequence for S^{2d+1} -> M -> N. SpecError for fixture bases.
CohomologyReport cohomology(const FiberJoinSpec& spec);

}  // namespace joincert

#endif  // JOINCERT_FIBERJOIN_HPP
