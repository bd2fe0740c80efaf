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

#include "joincert/spec_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "joincert/errors.hpp"

namespace joincert {

namespace {

using nlohmann::json;

// Records the offset of every value, keyed by JSON pointer. Input is
// already known to be valid JSON.
class PointerScanner {
 public:
  explicit PointerScanner(const std::string& t) : t_(t) {}

  std::map<std::string, std::size_t> run() {
    skip_ws();
    value("");
    return out_;
  }

 private:
  void skip_ws() {
    while (i_ < t_.size() && (t_[i_] == ' ' || t_[i_] == '\n' || t_[i_] == '\r' || t_[i_] == '\t')) ++i_;
  }

  std::string string_token() {
    std::string s;
    ++i_;  // opening quote
    while (i_ < t_.size() && t_[i_] != '"') {
      if (t_[i_] == '\\') {
        s += t_[i_ + 1];
        i_ += 2;
        continue;
      }
      s += t_[i_++];
    }
    ++i_;
    return s;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char ch : key) {
      if (ch == '~') out += "~0";
      else if (ch == '/') out += "~1";
      else out += ch;
    }
    return out;
  }

  void value(const std::string& ptr) {
    out_[ptr] = i_;
    const char ch = t_[i_];
    if (ch == '{') {
      ++i_;
      skip_ws();
      if (t_[i_] == '}') { ++i_; return; }
      while (true) {
        skip_ws();
        const std::size_t key_at = i_;
        const std::string key = string_token();
        skip_ws();
        ++i_;  // colon
        skip_ws();
        const std::string child = ptr + "/" + escape(key);
        value(child);
        keys_[child] = key_at;
        skip_ws();
        if (t_[i_] == ',') { ++i_; continue; }
        ++i_;  // closing brace
        return;
      }
    }
    if (ch == '[') {
      ++i_;
      skip_ws();
      if (t_[i_] == ']') { ++i_; return; }
      for (int k = 0;; ++k) {
        skip_ws();
        value(ptr + "/" + std::to_string(k));
        skip_ws();
        if (t_[i_] == ',') { ++i_; continue; }
        ++i_;
        return;
      }
    }
    if (ch == '"') {
      string_token();
      return;
    }
    while (i_ < t_.size() && std::string(",]} \n\r\t").find(t_[i_]) == std::string::npos) ++i_;
  }

  const std::string& t_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> out_;
  std::map<std::string, std::size_t> keys_;
};

class SpecParser {
 public:
  SpecParser(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  FiberJoinSpec parse() {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      const auto pos = position_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw SpecError(prefix(pos) + "malformed JSON: " + strip_what(e.what()));
    }
    if (!doc.is_object()) fail("", "the spec must be a JSON object");
    allow_keys(doc, "", {"base", "K", "d"});
    FiberJoinSpec spec;
    if (!doc.contains("base")) fail("", "missing required field \"base\"");
    spec.base = parse_base(doc["base"]);
    if (doc.contains("d")) {
      const json& d = doc["d"];
      if (!d.is_number_integer() || d.get<long>() < 1) fail("/d", "\"d\" must be a positive integer");
      spec.d = d.get<int>();
    }
    const int cols = spec.base.k_columns();
    if (cols == 0) {
      if (doc.contains("K")) fail("/K", "base kind " + to_string(spec.base.kind) + " fixes its own classes; omit \"K\"");
    } else {
      if (!doc.contains("K")) fail("", "missing required field \"K\"");
      spec.K = parse_k(doc["K"], cols);
    }
    try {
      if (cols > 0) validate(spec);
      else spec.base.check();
    } catch (const SpecError& e) {
      fail(cols > 0 ? "/K" : "/base", e.what());
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw SpecError(prefix(locate_pointer(text_, ptr)) + msg);
  }

  std::string prefix(const TextPosition& p) const {
    return source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": ";
  }

  static std::string strip_what(const std::string& w) {
    const auto at = w.find("]: ");
    return at == std::string::npos ? w : w.substr(at + 3);
  }

  void allow_keys(const json& obj, const std::string& ptr, const std::set<std::string>& allowed) const {
    for (const auto& [k, v] : obj.items()) {
      (void)v;
      if (!allowed.count(k)) fail(ptr + "/" + k, "unknown field \"" + k + "\"");
    }
  }

  long integer_param(const json& params, const std::string& name, const std::string& ptr) const {
    if (!params.contains(name)) fail(ptr, "missing parameter \"" + name + "\"");
    const json& v = params[name];
    if (!v.is_number_integer()) fail(ptr + "/" + name, "parameter \"" + name + "\" must be an integer");
    const long g = v.get<long>();
    if (g < 0) fail(ptr + "/" + name, "parameter \"" + name + "\" must be nonnegative");
    return g;
  }

  BaseManifold parse_base(const json& b) const {
    if (!b.is_object()) fail("/base", "\"base\" must be an object");
    allow_keys(b, "/base", {"kind", "params"});
    if (!b.contains("kind") || !b["kind"].is_string()) fail("/base", "\"base.kind\" must be a string");
    const std::string kind = b["kind"].get<std::string>();
    const json params = b.contains("params") ? b["params"] : json::object();
    if (!params.is_object()) fail("/base/params", "\"base.params\" must be an object");
    const std::string pp = "/base/params";
    if (kind == "surface") {
      allow_keys(params, pp, {"genus"});
      return BaseManifold::surface(integer_param(params, "genus", pp));
    }
    if (kind == "surface_product") {
      allow_keys(params, pp, {"genus1", "genus2"});
      return BaseManifold::surface_product(integer_param(params, "genus1", pp), integer_param(params, "genus2", pp));
    }
    if (kind == "cp1xcp1") {
      allow_keys(params, pp, {});
      return BaseManifold::cp1xcp1();
    }
    if (kind == "polystable_ruled") {
      allow_keys(params, pp, {"genus", "degE_parity"});
      const long g = integer_param(params, "genus", pp);
      if (g < 1) fail(pp + "/genus", "polystable_ruled requires genus >= 1");
      if (!params.contains("degE_parity") || !params["degE_parity"].is_string()) {
        fail(pp, "parameter \"degE_parity\" must be \"even\" or \"odd\"");
      }
      const std::string par = params["degE_parity"].get<std::string>();
      if (par != "even" && par != "odd") fail(pp + "/degE_parity", "parameter \"degE_parity\" must be \"even\" or \"odd\"");
      return BaseManifold::polystable_ruled(g, par == "odd" ? DegreeParity::kOdd : DegreeParity::kEven);
    }
    if (kind == "example38") {
      allow_keys(params, pp, {"genus"});
      const long g = integer_param(params, "genus", pp);
      if (g < 2) fail(pp + "/genus", "example38 requires genus >= 2");
      return BaseManifold::example38(g);
    }
    if (kind == "example39") {
      allow_keys(params, pp, {});
      return BaseManifold::example39();
    }
    fail("/base/kind", "unknown base kind \"" + kind +
                           "\" (expected surface, surface_product, cp1xcp1, polystable_ruled, example38, example39)");
  }

  KMatrix parse_k(const json& k, int cols) const {
    if (!k.is_array() || k.size() != 2) fail("/K", "\"K\" must be an array of 2 rows");
    KMatrix out;
    for (int j = 0; j < 2; ++j) {
      const std::string rp = "/K/" + std::to_string(j);
      const json& row = k[static_cast<std::size_t>(j)];
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        fail(rp, "K row " + std::to_string(j) + " must be an array of " + std::to_string(cols) + " entries");
      }
      std::vector<Rational> r;
      for (int i = 0; i < cols; ++i) {
        const std::string ep = rp + "/" + std::to_string(i);
        const json& e = row[static_cast<std::size_t>(i)];
        if (!e.is_string()) fail(ep, "K entries must be strings holding exact rationals, e.g. \"3\" or \"7/2\"");
        try {
          r.push_back(Rational::parse(e.get<std::string>()));
        } catch (const DomainError& err) {
          fail(ep, err.what());
        }
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  const std::string& text_;
  std::string source_;
};

}  // namespace

TextPosition position_of_offset(const std::string& text, std::size_t offset) {
  TextPosition p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

TextPosition locate_pointer(const std::string& text, const std::string& pointer) {
  if (!json::accept(text)) return {};
  const auto offsets = PointerScanner(text).run();
  std::string p = pointer;
  while (true) {
    const auto it = offsets.find(p);
    if (it != offsets.end()) return position_of_offset(text, it->second);
    if (p.empty()) return {};
    p = p.substr(0, p.rfind('/'));
  }
}

FiberJoinSpec parse_spec(const std::string& text, const std::string& source) {
  return SpecParser(text, source).parse();
}

FiberJoinSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot read spec file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

std::string spec_to_json(const FiberJoinSpec& spec) {
  json params = json::object();
  switch (spec.base.kind) {
    case BaseKind::kSurface:
    case BaseKind::kExample38:
      params["genus"] = spec.base.g1;
      break;
    case BaseKind::kSurfaceProduct:
      params["genus1"] = spec.base.g1;
      params["genus2"] = spec.base.g2;
      break;
    case BaseKind::kPolystableRuled:
      params["genus"] = spec.base.g1;
      params["degE_parity"] = spec.base.parity == DegreeParity::kOdd ? "odd" : "even";
      break;
    default:
      break;
  }
  json doc = {{"base", {{"kind", to_string(spec.base.kind)}, {"params", params}}}, {"d", spec.d}};
  if (!spec.K.empty()) {
    json k = json::array();
    for (const auto& row : spec.K) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      k.push_back(r);
    }
    doc["K"] = k;
  }
  return doc.dump();
}

}  // namespace joincert
