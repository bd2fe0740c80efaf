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

#include "serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "joincert/errors.hpp"

namespace joincert::cli {

namespace {

template <class T>
json array_of(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

std::string dimension_name(Dimension d) { return d == Dimension::kDim5 ? "dim5" : "dim7"; }

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Integer& n) { return n.get_str(); }

json to_json(const Poly& p) { return array_of(p.coeffs()); }

json to_json(const BiPoly& p) { return array_of(p.coeffs()); }

json to_json(const IsolatingInterval& iv) {
  json j = {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
  if (iv.exact) j["exact"] = to_json(*iv.exact);
  return j;
}

json to_json(const PositivityCertificate& c) {
  json j = {{"method", to_string(c.method)},
            {"polynomial", to_json(c.polynomial)},
            {"lo", to_json(c.lo)},
            {"hi", to_json(c.hi)}};
  if (c.method == PositivityMethod::kMobiusNonnegCoeffs) {
    j["transformed"] = to_json(c.transformed);
    return j;
  }
  j["lo_multiplicity"] = c.lo_multiplicity;
  j["hi_multiplicity"] = c.hi_multiplicity;
  j["cofactor"] = to_json(c.cofactor);
  j["square_free"] = to_json(c.square_free);
  j["sturm"] = array_of(c.sturm);
  j["sample"] = to_json(c.sample);
  j["sample_value"] = to_json(c.sample_value);
  return j;
}

json to_json(const Refutation& r) {
  json j = {{"value", to_json(r.value)}};
  if (r.point) j["point"] = to_json(*r.point);
  if (r.touching_root) j["touching_root"] = to_json(*r.touching_root);
  return j;
}

json to_json(const PositivityResult& r) {
  if (const auto* c = std::get_if<PositivityCertificate>(&r)) return {{"positive", true}, {"certificate", to_json(*c)}};
  return {{"positive", false}, {"refutation", to_json(std::get<Refutation>(r))}};
}

json to_json(const AdmissibleData& d) {
  json j = {{"dimension", dimension_name(d.dim)}, {"n1", to_json(d.n1)}, {"x1", to_json(d.x1)}, {"s1", to_json(d.s1)}};
  if (d.dim == Dimension::kDim7) {
    j["n2"] = to_json(d.n2);
    j["x2"] = to_json(d.x2);
    j["s2"] = to_json(d.s2);
  }
  json cls = json::object();
  for (const auto& [name, v] : d.class_terms) cls[name] = to_json(v);
  cls["Xi"] = to_json(d.xi_coefficient);
  j["kahler_class"] = cls;
  return j;
}

json to_json(const CrossCheck& c) { return {{"form", c.form}, {"scale", to_json(c.scale)}}; }

json to_json(const WholeConeCertificate& c) {
  json j = {{"method", to_string(c.method)},
            {"p", to_json(c.p)},
            {"normalizer", to_json(c.normalizer)},
            {"normalizer_positive", to_json(c.normalizer_positive)},
            {"cross_check", to_json(c.cross)}};
  if (c.method != ConeMethod::kEndpointTemplate) j["transformed"] = to_json(c.transformed);
  if (c.method == ConeMethod::kRowwise) j["rows_in"] = c.rows_in_b ? "b" : "y";
  if (!c.parts.empty()) j["parts"] = array_of(c.parts);
  return j;
}

json to_json(const Dim5RootCertificate& c) {
  return {{"method", "dim5-elimination"},
          {"h", to_json(c.h)},
          {"x", to_json(c.x)},
          {"h_at_x", to_json(c.h_at_x)},
          {"difference", to_json(c.difference)},
          {"quotients", array_of(c.quotients)},
          {"D", to_json(c.D)},
          {"D_positive", to_json(c.D_positive)}};
}

json to_json(const RegionCertificate& c) {
  return {{"method", "dim7-region"},
          {"lo", to_json(c.lo)},
          {"hi", to_json(c.hi)},
          {"discriminant", to_json(c.discriminant)},
          {"edge_minus", to_json(c.edge_minus)},
          {"edge_plus", to_json(c.edge_plus)},
          {"normalizer", to_json(c.normalizer)},
          {"mid", to_json(c.mid)},
          {"at_mid", to_json(c.at_mid)},
          {"halvings", c.halvings}};
}

json to_json(const RootEvidence& ev) {
  if (const auto* d5 = std::get_if<Dim5RootCertificate>(&ev)) return to_json(*d5);
  if (const auto* rc = std::get_if<RegionCertificate>(&ev)) return to_json(*rc);
  if (const auto* in = std::get_if<RegionInconclusive>(&ev)) {
    return {{"method", "dim7-region"},
            {"inconclusive", in->reason},
            {"lo", to_json(in->lo)},
            {"hi", to_json(in->hi)},
            {"halvings", in->halvings}};
  }
  const auto& ex = std::get<ExactRootEvidence>(ev);
  return {{"method", "exact-root"}, {"c", to_json(ex.c)}, {"positivity", to_json(ex.positivity)}};
}

json to_json(const LogPairQuotient& q) {
  json cls = json::object();
  for (const auto& [name, v] : q.kahler_class) cls[name] = to_json(v);
  cls["Xi"] = to_json(q.xi_coefficient);
  json j = {{"w", {to_json(q.w1), to_json(q.w2)}},
            {"bundle_degrees", array_of(q.bundle_degrees)},
            {"branch_weights", {to_json(q.branch_weights.first), to_json(q.branch_weights.second)}},
            {"kahler_class", cls},
            {"x", array_of(q.x)}};
  if (q.degenerate_flag) j["degenerate"] = *q.degenerate_flag;
  return j;
}

json to_json(const ColinearityResult& r) {
  json j = {{"colinear", r.colinear}, {"det", to_json(r.det)}};
  if (r.colinear) {
    j["omega_N"] = array_of(r.omega_N);
    j["b"] = {to_json(r.b1), to_json(r.b2)};
    j["l"] = to_json(r.l);
  }
  return j;
}

json to_json(const AdmissibilityReport& r) {
  json classes = json::array();
  for (const auto& v : r.factor_classes) classes.push_back(array_of(v));
  json j = {{"verdict", to_string(r.verdict)},
            {"basis", r.basis},
            {"factor_classes", classes},
            {"epsilons", r.epsilons},
            {"target", array_of(r.target)},
            {"y", array_of(r.y)},
            {"residual", array_of(r.residual)},
            {"x", array_of(r.x)},
            {"explanation", r.explanation}};
  if (r.bott_matrix) j["bott_matrix"] = *r.bott_matrix;
  return j;
}

json to_json(const CohomologyReport& r) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"degree", g.degree}, {"free_rank", g.free_rank}, {"torsion", array_of(g.torsion)}});
  }
  return {{"d", r.d},
          {"total_dimension", r.total_dimension},
          {"product", r.product},
          {"euler_number", to_json(r.euler_number)},
          {"base_betti", r.base_betti},
          {"groups", groups}};
}

json to_json(const EquivalenceReport& r) {
  return {{"holds", r.holds},
          {"f_CR", to_json(r.f_cr)},
          {"quintic", to_json(r.quintic)},
          {"fcr_scale", to_json(r.fcr_scale)},
          {"cleared_log_pair", to_json(r.cleared)},
          {"factor", to_json(r.factor)},
          {"h_scale", to_json(r.h_scale)}};
}

std::string digest(const json& j) {
  const std::string text = j.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  ensure(EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) == 1, "SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace joincert::cli
