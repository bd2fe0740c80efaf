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

#ifndef JOINCERT_ADMISSIBLE_HPP
#define JOINCERT_ADMISSIBLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "joincert/moments.hpp"
#include "joincert/rational.hpp"

namespace joincert {

/// Which closed-form table, if any, describes this data. Set by fiberjoin
/// when K matches one of the catalogued templates, so extremality can build
/// p twice and compare.
struct TableFamily {
  enum class Kind { kNone, kProductTemplate, kPolystableTemplate };
  Kind kind = Kind::kNone;
  long g1 = 0;  // kProductTemplate: genera (g1, g2); kPolystableTemplate: g in g1
  long g2 = 0;
};

/// Admissible data (n_i, x_i, s_i) of a regular or quasi-regular quotient.
/// dim5 reads n1, x1, s1 only.
struct AdmissibleData {
  Dimension dim = Dimension::kDim5;
  Rational n1, n2;
  Rational x1, x2, s1, s2;
  /// Quotient Kaehler class up to scale: coefficients over the base H^2
  /// basis (in units of 2 pi), plus the coefficient of Xi.
  std::vector<std::pair<std::string, Rational>> class_terms;
  Rational xi_coefficient = Rational(1);
  TableFamily family;

  /// Throws DomainError unless 0 < |x_i| < 1 and x_i n_i > 0.
  void check() const;
};

}  // namespace joincert

#endif  // JOINCERT_ADMISSIBLE_HPP
