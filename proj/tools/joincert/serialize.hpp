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

#ifndef JOINCERT_TOOLS_SERIALIZE_HPP
#define JOINCERT_TOOLS_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "joincert/cscsolver.hpp"
#include "joincert/extremality.hpp"
#include "joincert/fiberjoin.hpp"

namespace joincert::cli {

using nlohmann::json;

// Rationals are strings "p/q"; polynomials are coefficient arrays in
// increasing degree; bivariate polynomials nest the inner coefficients.

json to_json(const Rational& r);
json to_json(const Integer& n);
json to_json(const Poly& p);
json to_json(const BiPoly& p);
json to_json(const IsolatingInterval& iv);
json to_json(const PositivityCertificate& cert);
json to_json(const Refutation& ref);
json to_json(const PositivityResult& r);
json to_json(const AdmissibleData& d);
json to_json(const CrossCheck& c);
json to_json(const WholeConeCertificate& cert);
json to_json(const Dim5RootCertificate& cert);
json to_json(const RegionCertificate& cert);
json to_json(const RootEvidence& ev);
json to_json(const LogPairQuotient& q);
json to_json(const ColinearityResult& r);
json to_json(const AdmissibilityReport& r);
json to_json(const CohomologyReport& r);
json to_json(const EquivalenceReport& r);

/// Hex SHA-256 of the compact dump (keys are sorted by nlohmann::json).
std::string digest(const json& j);

}  // namespace joincert::cli

#endif  // JOINCERT_TOOLS_SERIALIZE_HPP
