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

#ifndef JOINCERT_CSCSOLVER_HPP
#define JOINCERT_CSCSOLVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "joincert/admissible.hpp"
#include "joincert/exactalg.hpp"
#include "joincert/fiberjoin.hpp"
#include "joincert/polynomial.hpp"

namespace joincert {

// ---------------------------------------------------------------------------
// The CSC polynomial h(c)

enum class HProvenance { kFromIntegrals, kExplicitForm };

std::string to_string(HProvenance p);

struct CscPolynomial {
  Poly h;
  Dimension dim = Dimension::kDim5;
  HProvenance provenance = HProvenance::kFromIntegrals;
};

/// The displayed cubic (dim5) and quintic (dim7) in c.
Poly explicit_h_dim5(const Rational& x, const Rational& s);
Poly explicit_h_dim7(const Rational& x1, const Rational& x2, const Rational& s1, const Rational& s2);

/// (3/4)(1-c^2)^5 (alpha_{1,4} beta_{0,3} - alpha_{0,4} beta_{1,3}) in dim5,
/// (9/4)(1-c^2)^7 (alpha_{1,5} beta_{0,4} - alpha_{0,5} beta_{1,4}) in dim7.
Poly h_from_integrals(const AdmissibleData& data);

/// h from the integrals, checked against the explicit form. InvariantViolation
/// on mismatch or on a failed endpoint identity.
CscPolynomial build_h(const AdmissibleData& data);

// ---------------------------------------------------------------------------
// Extremality at a root

/// At a root of h the dim5 polynomial factors as
///   (1 - c^2) p(z) = D(c) (1 + c z) (1 - c x + (x - c) z),
/// with D(c) = (1-c)^2 (1+x)^2 + (1+c)^2 (1-x)^2 + 4 (1-c^2)(1-x^2) > 0.
/// Each z-coefficient of the difference is a multiple of h(c).
struct Dim5RootCertificate {
  Poly h;
  Rational x;
  /// h(x) = 3x(1-x^2)^2, nonzero, so the root is not c = x.
  Rational h_at_x;
  /// (1 - c^2) p - D (1 + cz)(1 - cx + (x - c) z), z outer and c inner.
  BiPoly difference;
  /// difference_k = quotients[k] * h.
  std::vector<Poly> quotients;
  Poly D;
  PositivityCertificate D_positive;
};

/// Exact elimination certificate. InvariantViolation if the identity fails.
Dim5RootCertificate certify_positivity_at_root_dim5(const AdmissibleData& data, const Poly& h);

/// Region evidence for dim7: on [lo, hi] none of the z-discriminant
/// Res_z(p, dp/dz), p(-1, c) and p(1, c) vanishes, so the number of roots
/// of p(., c) in (-1, 1) is constant there. The sample at mid decides it.
struct RegionCertificate {
  Rational lo, hi;
  Poly discriminant;
  Poly edge_minus, edge_plus;
  Poly normalizer;
  Rational mid;
  PositivityResult at_mid;
  int halvings = 0;

  bool positive() const { return std::holds_alternative<PositivityCertificate>(at_mid); }
};

struct RegionInconclusive {
  Rational lo, hi;
  int halvings = 0;
  std::string reason;
};

/// Retries on halved intervals up to max_halvings times.
std::variant<RegionCertificate, RegionInconclusive> certify_positivity_at_root_dim7(
    const AdmissibleData& data, const Poly& h, const IsolatingInterval& root, int max_halvings = 12);

/// Replays the stored facts against the data.
bool verify(const Dim5RootCertificate& cert);
bool verify(const RegionCertificate& cert, const AdmissibleData& data);

// ---------------------------------------------------------------------------
// CSC rays

/// Rational root: the ray is decided by a direct check at c.
struct ExactRootEvidence {
  Rational c;
  PositivityResult positivity;
};

using RootEvidence = std::variant<Dim5RootCertificate, RegionCertificate, RegionInconclusive, ExactRootEvidence>;

struct CscRayCertificate {
  IsolatingInterval root;
  RootEvidence evidence;
  /// Coprime positive weights when the root is rational.
  std::optional<std::pair<Integer, Integer>> weights;

  /// "csc ray", "not extremal at the csc root" or "inconclusive".
  std::string status() const;
  bool certified() const;
};

struct CscReport {
  CscPolynomial h;
  std::vector<CscRayCertificate> rays;
};

/// Every root of h in (-1, 1) with extremality evidence.
CscReport find_csc_rays(const AdmissibleData& data);
CscReport find_csc_rays(const FiberJoinSpec& spec);

// ---------------------------------------------------------------------------
// CP1 x CP1: the weight forms

/// f_CR(c) for the regular quotient of a CP1 x CP1 fiber join.
Poly f_CR(const KMatrix& K);

/// The degree-5 form in (w1, w2), dehomogenized at w2 = 1: coefficient j
/// multiplies w1^j w2^(5-j).
Poly csc_weight_quintic(const KMatrix& K);

/// Evaluates a form of the given degree stored as above.
Rational eval_form(const Poly& form, int degree, const Integer& w1, const Integer& w2);

/// Residual of the log-pair CSC equation for data (n, x) on weights w.
Rational csc_in_x(const Integer& w1, const Integer& w2, const Rational& n1, const Rational& n2,
                  const Rational& x1, const Rational& x2);

/// csc_in_x on the quasi-regular data of w, times
/// (w2 k^1_1 + w1 k^1_2)^2 (w2 k^2_1 + w1 k^2_2)^2: a degree-7 form.
Poly csc_in_x_cleared(const KMatrix& K);

struct EquivalenceReport {
  Poly f_cr;
  Poly quintic;
  /// (w1 + w2)^5 f_CR((w1 - w2)/(w1 + w2)) = fcr_scale * quintic.
  Rational fcr_scale;
  Poly cleared;
  /// cleared = factor * quintic; factor = -8 n1(w) n2(w).
  Poly factor;
  /// h for s_i = 2/n_i equals h_scale * f_CR.
  Rational h_scale;
  bool holds = false;
};

/// Checks every identity linking f_CR, the quintic, the log-pair equation
/// and h. InvariantViolation on any failure.
EquivalenceReport check_equivalence(const KMatrix& K);

}  // namespace joincert

#endif  // JOINCERT_CSCSOLVER_HPP
