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

#ifndef JOINCERT_EXTREMALITY_HPP
#define JOINCERT_EXTREMALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "joincert/admissible.hpp"
#include "joincert/exactalg.hpp"
#include "joincert/moments.hpp"
#include "joincert/polynomial.hpp"
#include "joincert/ratfunc.hpp"

namespace joincert {

/// One ray of the Sasaki cone, parametrized by c in (-1,1).
struct ExtremalityProblem {
  AdmissibleData data;
  Rational c;

  /// DomainError unless the data is valid and |c| < 1.
  void check() const;
};

/// Exact solution of the 2x2 alpha system
///   alpha_{1} A1 + alpha_{0} A2 = 2 beta_0,  alpha_{2} A1 + alpha_{1} A2 = 2 beta_1.
std::pair<Rational, Rational> solve_A_system(const ExtremalityProblem& problem);

/// F_c = scalar_prefactor * (1 - z^2) * p.
struct ReducedExtremalPoly {
  Poly F;
  Poly p;
  Rational scalar_prefactor;
  /// Power k of (cz + 1) multiplied into the bracket (3 or 4).
  int u_power = 0;
  /// nu(c) = 1 / scalar_prefactor.
  Rational normalizer;
};

/// F from the integral formula, reduced to p. InvariantViolation if the
/// Laurent cancellation, F(-1) = 0 or F(1) = 0 fails.
ReducedExtremalPoly build_F(const ExtremalityProblem& problem);

/// The same construction over Q(c). p and the normalizer nu(c) are
/// polynomial in c; p is returned with z outer and c inner.
struct SymbolicReduced {
  Polynomial<RatFunc> F;
  BiPoly p;
  Poly normalizer;
};
SymbolicReduced build_F_symbolic(const AdmissibleData& data);

// ---------------------------------------------------------------------------
// Closed forms

/// Displayed dim5 p(z) in terms of (x, s, c). Same normalization as build_F.
Poly explicit_p_dim5(const Rational& x, const Rational& s, const Rational& c);
BiPoly explicit_p_dim5_symbolic(const Rational& x, const Rational& s);

/// h_0(c), common to both dim7 tables.
Poly table_h0();

/// The cubic 8 g1 g2 h0 + 4 h2 (1+z) + 2 h3 (1+z)^2 + h4 (1+z)^3 for
/// K = [[10 g1, 100 g2], [2 g1, g2]]. Equals 1212 g1 g2 h0 F / (1 - z^2).
BiPoly product_table_p(long g1, long g2);

/// 8 g h0 + (...)(z+1) + ... for the polystable ruled template;
/// equals 1212 g h0 F / (1 - z^2).
BiPoly polystable_table_p(long g);

/// Closed form matching data.family, if there is one.
std::optional<BiPoly> table_p(const AdmissibleData& data);

/// Result of comparing build_F against a closed form.
struct CrossCheck {
  std::string form = "none";  // "explicit-dim5", "product-table", "polystable-table"
  /// closed form = scale * p.
  Rational scale = Rational(1);
};

/// Compares against the closed form, if any; InvariantViolation on mismatch.
CrossCheck cross_check(const AdmissibleData& data, const Rational& c, const Poly& p);

// ---------------------------------------------------------------------------
// Per-ray verdicts

struct RayVerdict {
  Rational c;
  ReducedExtremalPoly reduced;
  CrossCheck cross;
  PositivityResult positivity;
  bool extremal = false;

  std::string verdict() const;
};

RayVerdict is_extremal_ray(const ExtremalityProblem& problem);

// ---------------------------------------------------------------------------
// Whole-cone certification

enum class ConeMethod {
  kMobiusBivariate,   // every coefficient of T(b, y) is >= 0
  kRowwise,           // each row of T in one variable is > 0 on (0, inf)
  kEndpointTemplate,  // p = sum a_i(c) (1+z)^i with a_i > 0 and p(1) > 0
};

std::string to_string(ConeMethod m);

struct WholeConeCertificate {
  ConeMethod method = ConeMethod::kMobiusBivariate;
  BiPoly p;  // z outer, c inner
  Poly normalizer;
  PositivityCertificate normalizer_positive;
  CrossCheck cross;
  /// T(b, y) = (1+b)^dc (1+y)^dz p((1-y)/(1+y); (1-b)/(1+b)); y outer, b inner.
  BiPoly transformed;
  /// kRowwise: rows taken as powers of b (true) or of y (false).
  bool rows_in_b = true;
  /// kRowwise: certificates for the Moebius image of each nonzero row.
  /// kEndpointTemplate: a_0 .. a_{d-1}, then p(1; c).
  std::vector<PositivityCertificate> parts;
};

struct ConeCounterexample {
  Rational c;
  Rational z;
  Rational value;  // p(z; c) <= 0
  int farey_order = 0;
};

struct ConeInconclusive {
  std::string reason;
};

using WholeConeResult = std::variant<WholeConeCertificate, ConeCounterexample, ConeInconclusive>;

/// Tries the sufficient conditions in order, then a Farey grid search
/// (order 64, then 128) for a ray where p fails to be positive.
WholeConeResult certify_whole_cone(const AdmissibleData& data);

/// (1+b)^dc (1+y)^dz p((1-y)/(1+y); (1-b)/(1+b)), dc and dz the degrees of
/// p in c and z.
BiPoly mobius_bivariate(const BiPoly& p);

/// Swaps outer and inner variables.
BiPoly transpose(const BiPoly& p);

/// Replays a whole-cone certificate.
bool verify(const WholeConeCertificate& cert);

}  // namespace joincert

#endif  // JOINCERT_EXTREMALITY_HPP
