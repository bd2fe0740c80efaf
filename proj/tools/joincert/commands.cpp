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

#include "commands.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "joincert/cscsolver.hpp"
#include "joincert/errors.hpp"
#include "joincert/extremality.hpp"
#include "joincert/spec_io.hpp"
#include "serialize.hpp"

#ifndef JOINCERT_VERSION
#define JOINCERT_VERSION "0.0.0"
#endif

namespace joincert::cli {

namespace {

json spec_echo(const FiberJoinSpec& spec) { return json::parse(spec_to_json(spec)); }

json ray_of(const Rational& c) {
  const auto [w1, w2] = ray_to_weights(c);
  return {{"c", to_json(c)}, {"w", {to_json(w1), to_json(w2)}}};
}

json verdict(json ray, const std::string& extremal, const std::string& csc, json certificate,
             const std::string& statement) {
  return {{"ray", std::move(ray)},
          {"extremal", extremal},
          {"csc", csc},
          {"certificate", std::move(certificate)},
          {"statement", statement}};
}

bool csc_at(const AdmissibleData& d, const Rational& c) { return build_h(d).h(c).is_zero(); }

void check_positivity(const PositivityResult& r) {
  if (const auto* pc = std::get_if<PositivityCertificate>(&r)) ensure(verify(*pc), "positivity certificate replay");
}

void extremal_report(const FiberJoinSpec& spec, const Request& req, json& result, json& verdicts) {
  const AdmissibleData data = validate(spec);
  result["admissible_data"] = to_json(data);
  if (req.all_rays) {
    const WholeConeResult cone = certify_whole_cone(data);
    const CscReport csc = find_csc_rays(data);
    json roots = json::array();
    int certified = 0;
    for (const auto& ray : csc.rays) {
      roots.push_back({{"root", to_json(ray.root)}, {"status", ray.status()}});
      if (ray.certified()) ++certified;
    }
    json cert;
    std::string ext, statement;
    if (const auto* wc = std::get_if<WholeConeCertificate>(&cone)) {
      ensure(verify(*wc), "whole-cone certificate replay");
      ext = "yes";
      statement = "entire cone extremal";
      cert = to_json(*wc);
    } else if (const auto* ce = std::get_if<ConeCounterexample>(&cone)) {
      ext = "no";
      statement = "not every ray is extremal: p(" + ce->z.str() + "; c = " + ce->c.str() + ") = " + ce->value.str();
      cert = {{"counterexample",
               {{"c", to_json(ce->c)}, {"z", to_json(ce->z)}, {"value", to_json(ce->value)},
                {"farey_order", ce->farey_order}}}};
    } else {
      ext = "inconclusive";
      statement = "inconclusive: " + std::get<ConeInconclusive>(cone).reason;
      cert = {{"reason", std::get<ConeInconclusive>(cone).reason}};
    }
    cert["csc_roots"] = roots;
    verdicts.push_back(verdict("all", ext, certified > 0 ? "yes" : "no", cert, statement));
    return;
  }
  Rational c;
  if (req.c) {
    c = *req.c;
  } else if (req.w) {
    c = weights_to_ray(req.w->first, req.w->second);
  } else {
    throw DomainError("extremal needs --c, --w or --all-rays");
  }
  const RayVerdict v = is_extremal_ray({data, c});
  check_positivity(v.positivity);
  json cert = {{"p", to_json(v.reduced.p)},
               {"normalizer", to_json(v.reduced.normalizer)},
               {"cross_check", to_json(v.cross)},
               {"positivity", to_json(v.positivity)}};
  if (!v.extremal && v.reduced.p.degree() > 0) {
    // Roots of p in (-1, 1) bound the region where it fails.
    json roots = json::array();
    for (const auto& iv : isolate_roots(v.reduced.p, Rational(-1), Rational(1))) roots.push_back(to_json(iv));
    cert["roots"] = roots;
  }
  if (req.probe) {
    if (req.probe->abs() >= Rational(1)) throw DomainError("--probe must lie in (-1, 1)");
    cert["probe"] = {{"z", to_json(*req.probe)}, {"value", to_json(v.reduced.p(*req.probe))}};
  }
  verdicts.push_back(verdict(ray_of(c), v.extremal ? "yes" : "no", v.extremal && csc_at(data, c) ? "yes" : "no",
                             cert, v.verdict()));
}

void csc_report(const FiberJoinSpec& spec, const Request& req, json& result, json& verdicts) {
  const AdmissibleData data = validate(spec);
  const CscReport rep = find_csc_rays(data);
  result["admissible_data"] = to_json(data);
  result["h"] = to_json(rep.h.h);
  result["h_provenance"] = to_string(rep.h.provenance);
  result["explicit_form_agrees"] = true;
  const Rational tol = req.tolerance.value_or(default_tolerance());
  for (const auto& ray : rep.rays) {
    if (const auto* d5 = std::get_if<Dim5RootCertificate>(&ray.evidence)) ensure(verify(*d5), "dim5 certificate replay");
    if (const auto* rc = std::get_if<RegionCertificate>(&ray.evidence)) {
      ensure(verify(*rc, data), "region certificate replay");
    }
    if (const auto* ex = std::get_if<ExactRootEvidence>(&ray.evidence)) check_positivity(ex->positivity);
    IsolatingInterval iv = ray.root;
    if (!iv.exact && iv.width() > tol) iv = refine_root(rep.h.h, iv, tol);
    json r = {{"root", to_json(iv)}};
    if (ray.weights) r["w"] = {to_json(ray.weights->first), to_json(ray.weights->second)};
    const std::string status = ray.status();
    const std::string ext = ray.certified() ? "yes" : (status == "inconclusive" ? "inconclusive" : "no");
    verdicts.push_back(verdict(r, ext, ray.certified() ? "yes" : "no", to_json(ray.evidence), status));
  }
}

void quotient_report(const FiberJoinSpec& spec, const Request& req, json& result) {
  result["admissibility"] = to_json(strong_admissibility_check(spec));
  if (spec.base.k_columns() == 0) return;
  std::pair<Integer, Integer> w{1, 1};
  if (req.w) w = *req.w;
  else if (req.c) w = ray_to_weights(*req.c);
  result["regular"] = to_json(validate(spec));
  result["quotient"] = to_json(quasiregular_quotient(spec, w.first, w.second));
  result["colinearity"] = to_json(colinearity_check(spec));
}

json strip(json j, std::initializer_list<const char*> keys) {
  for (const char* k : keys) j.erase(k);
  return j;
}

void collect_digests(const json& report, std::vector<std::string>& out) {
  if (report.contains("digest")) out.push_back(report["digest"].get<std::string>());
  if (report.contains("verdicts")) {
    for (const auto& v : report["verdicts"]) out.push_back(v["digest"].get<std::string>());
  }
}

bool contains_digest(const json& report, const std::string& d) {
  std::vector<std::string> all;
  collect_digests(report, all);
  for (const auto& x : all) {
    if (x == d) return true;
  }
  return false;
}

void replay_one(const json& stored, ReplayResult& out, const std::string& where) {
  // Stored digests must match the stored content.
  json resealed = stored;
  seal(resealed);
  if (resealed["digest"] != stored["digest"]) out.mismatches.push_back(where + ": report content does not match its digest");
  const FiberJoinSpec spec = parse_spec(stored["spec"].dump(), where);
  const Request req = Request::from_json(stored["request"]);
  const json fresh = run_request(spec, req);
  ++out.reports;
  const json& a = stored["verdicts"];
  const json& b = fresh["verdicts"];
  if (a.size() != b.size()) {
    out.mismatches.push_back(where + ": verdict count changed");
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      ++out.verdicts;
      if (a[i]["digest"] != b[i]["digest"]) {
        out.mismatches.push_back(where + ": verdict " + std::to_string(i) + " digest " + a[i]["digest"].get<std::string>() +
                                 " recomputed as " + b[i]["digest"].get<std::string>());
      }
    }
  }
  if (fresh["digest"] != stored["digest"]) out.mismatches.push_back(where + ": report digest changed");
}

}  // namespace

json Request::to_json() const {
  json j = {{"command", command}, {"all_rays", all_rays}};
  if (c) j["c"] = c->str();
  if (w) j["w"] = {w->first.get_str(), w->second.get_str()};
  if (tolerance) j["tolerance"] = tolerance->str();
  if (probe) j["probe"] = probe->str();
  return j;
}

Request Request::from_json(const json& j) {
  Request r;
  r.command = j.at("command").get<std::string>();
  r.all_rays = j.value("all_rays", false);
  if (j.contains("c")) r.c = Rational::parse(j["c"].get<std::string>());
  if (j.contains("w")) r.w = {Integer(j["w"][0].get<std::string>()), Integer(j["w"][1].get<std::string>())};
  if (j.contains("tolerance")) r.tolerance = Rational::parse(j["tolerance"].get<std::string>());
  if (j.contains("probe")) r.probe = Rational::parse(j["probe"].get<std::string>());
  return r;
}

Rational parse_dyadic(const std::string& text) {
  Rational t;
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    if (text.substr(0, caret) != "2") throw DomainError("tolerance must be 2^-k or p/2^k");
    const Rational e = Rational::parse(text.substr(caret + 1));
    if (!e.is_integer() || !e.num().fits_slong_p()) throw DomainError("tolerance exponent must be an integer");
    t = Rational::pow2(e.num().get_si());
  } else {
    t = Rational::parse(text);
    Integer d = t.den();
    while (d % 2 == 0) d /= 2;
    if (d != 1) throw DomainError("tolerance must be dyadic: " + text);
  }
  if (t.sign() <= 0 || t >= Rational(1)) throw DomainError("tolerance must lie in (0, 1)");
  return t;
}

std::pair<Integer, Integer> parse_weights(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("weights are written A,B");
  const Rational a = Rational::parse(text.substr(0, comma));
  const Rational b = Rational::parse(text.substr(comma + 1));
  if (!a.is_integer() || !b.is_integer()) throw DomainError("weights must be integers");
  weights_to_ray(a.num(), b.num());
  return {a.num(), b.num()};
}

int workers_from_env() {
  const char* v = std::getenv("JOINCERT_WORKERS");
  if (v == nullptr || *v == '\0') return 1;
  const Rational n = Rational::parse(v);
  if (!n.is_integer() || n.sign() <= 0 || n > Rational(1024)) {
    throw DomainError("JOINCERT_WORKERS must be an integer in [1, 1024]");
  }
  return static_cast<int>(n.num().get_si());
}

void seal(json& report) {
  if (report.contains("verdicts")) {
    for (auto& v : report["verdicts"]) v["digest"] = digest(strip(v, {"digest"}));
  }
  report["digest"] = digest(strip(report, {"digest", "timing"}));
}

json run_request(const FiberJoinSpec& spec, const Request& req) {
  json result = json::object();
  json verdicts = json::array();
  if (req.command == "extremal") {
    extremal_report(spec, req, result, verdicts);
  } else if (req.command == "csc") {
    csc_report(spec, req, result, verdicts);
  } else if (req.command == "quotient") {
    quotient_report(spec, req, result);
  } else if (req.command == "cohomology") {
    result = to_json(cohomology(spec));
  } else if (req.command == "equiv") {
    if (spec.base.kind != BaseKind::kCP1xCP1) throw DomainError("equiv applies to cp1xcp1 specs");
    validate(spec);
    result = to_json(check_equivalence(spec.K));
  } else {
    throw DomainError("unknown command \"" + req.command + "\"");
  }
  json report = {{"schema", kSchemaVersion},
                 {"tool", {{"name", "joincert"}, {"version", JOINCERT_VERSION}}},
                 {"request", req.to_json()},
                 {"spec", spec_echo(spec)},
                 {"result", result},
                 {"verdicts", verdicts}};
  seal(report);
  return report;
}

json run_scan(const Family& family, int workers) {
  const std::vector<Bindings> cells = family.cells();
  std::vector<json> out(cells.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> internal_errors(cells.size());
  const auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      json cell = {{"bindings", cells[i]}};
      try {
        const FiberJoinSpec spec = family.instantiate(cells[i]);
        cell["spec"] = spec_echo(spec);
        json reports = json::object();
        for (const std::string& check : family.checks) {
          Request r;
          r.command = check;
          r.all_rays = check == "extremal";
          reports[check] = run_request(spec, r);
        }
        cell["reports"] = reports;
      } catch (const SpecError& e) {
        cell["invalid"] = e.what();
      } catch (const DomainError& e) {
        cell["invalid"] = e.what();
      } catch (const std::exception& e) {
        internal_errors[i] = e.what();
      }
      out[i] = std::move(cell);
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : internal_errors) {
    if (!e.empty()) throw InvariantViolation("scan cell failed: " + e);
  }

  long invalid = 0, extremal = 0, not_extremal = 0, inconclusive = 0, csc_cells = 0, csc_rays = 0, equiv = 0;
  for (const json& cell : out) {
    if (cell.contains("invalid")) {
      ++invalid;
      continue;
    }
    const json& r = cell["reports"];
    if (r.contains("extremal")) {
      const std::string e = r["extremal"]["verdicts"][0]["extremal"];
      if (e == "yes") ++extremal;
      else if (e == "no") ++not_extremal;
      else ++inconclusive;
    }
    if (r.contains("csc")) {
      long found = 0;
      for (const auto& v : r["csc"]["verdicts"]) {
        if (v["csc"] == "yes") ++found;
        if (v["extremal"] == "inconclusive") ++inconclusive;
      }
      csc_rays += found;
      if (found > 0) ++csc_cells;
    }
    if (r.contains("equiv") && r["equiv"]["result"]["holds"] == true) ++equiv;
  }
  json summary = {{"cells", static_cast<long>(out.size())},
                  {"invalid", invalid},
                  {"extremal_cones", extremal},
                  {"not_extremal_cones", not_extremal},
                  {"inconclusive", inconclusive},
                  {"cells_with_csc_ray", csc_cells},
                  {"csc_rays_found", csc_rays},
                  {"equivalence_holds", equiv}};
  json report = {{"schema", kSchemaVersion},
                 {"tool", {{"name", "joincert"}, {"version", JOINCERT_VERSION}}},
                 {"request", {{"command", "scan"}}},
                 {"family", family.source},
                 {"cells", out},
                 {"summary", summary}};
  seal(report);
  return report;
}

ReplayResult replay(const json& report, const std::optional<std::string>& want, int workers) {
  ReplayResult out;
  if (report.value("schema", "") != std::string(kSchemaVersion)) throw DomainError("unsupported report schema");
  const std::string command = report.at("request").at("command").get<std::string>();
  if (command != "scan") {
    if (want && !contains_digest(report, *want)) throw DomainError("digest " + *want + " is not in this report");
    replay_one(report, out, "report");
    return out;
  }
  const Family family = parse_family(report["family"].dump(), "<report family>");
  if (!want || *want == report["digest"]) {
    const json fresh = run_scan(family, workers);
    ++out.reports;
    if (fresh["digest"] != report["digest"]) out.mismatches.push_back("scan: report digest changed");
    for (const auto& cell : fresh["cells"]) {
      if (!cell.contains("reports")) continue;
      for (const auto& [k, r] : cell["reports"].items()) {
        (void)k;
        out.verdicts += static_cast<int>(r["verdicts"].size());
      }
    }
    return out;
  }
  const json& cells = report["cells"];
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].contains("reports")) continue;
    for (const auto& [check, r] : cells[i]["reports"].items()) {
      if (!contains_digest(r, *want)) continue;
      replay_one(r, out, "cell " + std::to_string(i) + " " + check);
    }
  }
  if (out.reports == 0) throw DomainError("digest " + *want + " is not in this report");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string poly_text(const json& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::string c = coeffs[i].get<std::string>();
    if (c == "0") continue;
    const bool neg = c[0] == '-';
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (i == 0 || c != "1") os << c;
    if (i > 0) os << (c != "1" ? " " : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

std::string spec_text(const json& spec) {
  std::ostringstream os;
  os << spec["base"]["kind"].get<std::string>();
  for (const auto& [k, v] : spec["base"]["params"].items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  if (spec.contains("K")) {
    os << " K=[";
    for (std::size_t j = 0; j < spec["K"].size(); ++j) {
      os << (j ? "; " : "");
      for (std::size_t i = 0; i < spec["K"][j].size(); ++i) os << (i ? " " : "") << spec["K"][j][i].get<std::string>();
    }
    os << "]";
  }
  return os.str();
}

std::string ray_text(const json& ray) {
  if (ray.is_string()) return ray.get<std::string>() + " rays";
  std::ostringstream os;
  if (ray.contains("c")) os << "c = " << ray["c"].get<std::string>();
  if (ray.contains("root")) {
    const json& r = ray["root"];
    if (r.contains("exact")) os << "c = " << r["exact"].get<std::string>();
    else os << "c in (" << r["lo"].get<std::string>() << ", " << r["hi"].get<std::string>() << ")";
  }
  if (ray.contains("w")) os << ", w = (" << ray["w"][0].get<std::string>() << ", " << ray["w"][1].get<std::string>() << ")";
  return os.str();
}

void render_single(const json& report, std::ostringstream& os) {
  const std::string cmd = report["request"]["command"];
  os << "spec: " << spec_text(report["spec"]) << "\n";
  const json& result = report["result"];
  if (cmd == "csc") os << "h(c) = " << poly_text(result["h"], "c") << "\n";
  if (cmd == "cohomology") {
    os << "total dimension " << result["total_dimension"].get<int>() << (result["product"] == true ? " (product)" : "")
       << ", e = " << result["euler_number"].get<std::string>() << "\n";
    for (const auto& g : result["groups"]) {
      os << "  H^" << g["degree"].get<int>() << " = Z^" << g["free_rank"].get<long>();
      for (const auto& t : g["torsion"]) os << " + Z_" << t.get<std::string>();
      os << "\n";
    }
  }
  if (cmd == "quotient") {
    os << "admissibility: " << result["admissibility"]["verdict"].get<std::string>() << "\n";
    if (!result["admissibility"]["explanation"].get<std::string>().empty()) {
      os << "  " << result["admissibility"]["explanation"].get<std::string>() << "\n";
    }
    if (result.contains("quotient")) {
      const json& q = result["quotient"];
      os << "quotient at w = (" << q["w"][0].get<std::string>() << ", " << q["w"][1].get<std::string>() << "): n =";
      for (const auto& n : q["bundle_degrees"]) os << " " << n.get<std::string>();
      if (q.contains("degenerate")) os << " (" << q["degenerate"].get<std::string>() << ")";
      else {
        os << ", x =";
        for (const auto& x : q["x"]) os << " " << x.get<std::string>();
      }
      os << "\ncolinear: " << (result["colinearity"]["colinear"] == true ? "yes" : "no") << "\n";
    }
  }
  if (cmd == "equiv") {
    os << "equivalence " << (result["holds"] == true ? "holds" : "fails") << ": (w1+w2)^5 f_CR = "
       << result["fcr_scale"].get<std::string>() << " * quintic, cleared log-pair form = ("
       << poly_text(result["factor"], "w1") << ") * quintic at w2 = 1\n";
  }
  for (const auto& v : report["verdicts"]) {
    os << ray_text(v["ray"]) << ": " << v["statement"].get<std::string>() << "\n";
    const json& cert = v["certificate"];
    if (cert.contains("positivity") && cert["positivity"].contains("refutation")) {
      const json& r = cert["positivity"]["refutation"];
      if (r.contains("point")) {
        os << "  refuted: p(" << r["point"].get<std::string>() << ") = " << r["value"].get<std::string>() << "\n";
      }
    }
    if (cert.contains("probe")) {
      os << "  p(" << cert["probe"]["z"].get<std::string>() << ") = " << cert["probe"]["value"].get<std::string>() << "\n";
    }
    if (cert.contains("method")) os << "  method: " << cert["method"].get<std::string>() << "\n";
    os << "  digest " << v["digest"].get<std::string>() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  const std::string cmd = report["request"]["command"];
  os << "joincert " << cmd << " (schema " << report["schema"].get<std::string>() << ")\n";
  if (cmd == "scan") {
    const json& s = report["summary"];
    for (const auto& [k, v] : s.items()) os << "  " << k << ": " << v.get<long>() << "\n";
  } else {
    render_single(report, os);
  }
  os << "report digest " << report["digest"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace joincert::cli
