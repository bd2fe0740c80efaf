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

#include "family.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <type_traits>

#include "joincert/errors.hpp"
#include "joincert/spec_io.hpp"

namespace joincert::cli {

using nlohmann::json;

struct Expr::Node {
  char op = 0;  // 0: number, 'v': variable, '~': negation, else binary
  Rational value;
  std::string name;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class ExprParser {
 public:
  explicit ExprParser(const std::string& t) : t_(t) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip();
    if (i_ != t_.size()) fail("unexpected '" + std::string(1, t_[i_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SpecError("bad expression \"" + t_ + "\": " + why);
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  static NodePtr binary(char op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }
  NodePtr sum() {
    NodePtr n = product();
    while (true) {
      skip();
      if (i_ < t_.size() && (t_[i_] == '+' || t_[i_] == '-')) {
        const char op = t_[i_++];
        n = binary(op, n, product());
      } else {
        return n;
      }
    }
  }
  NodePtr product() {
    NodePtr n = unary();
    while (true) {
      skip();
      if (i_ < t_.size() && (t_[i_] == '*' || t_[i_] == '/')) {
        const char op = t_[i_++];
        n = binary(op, n, unary());
      } else {
        return n;
      }
    }
  }
  NodePtr unary() {
    skip();
    if (i_ < t_.size() && t_[i_] == '-') {
      ++i_;
      auto n = std::make_shared<Expr::Node>();
      n->op = '~';
      n->a = unary();
      return n;
    }
    return atom();
  }
  NodePtr atom() {
    skip();
    if (i_ >= t_.size()) fail("unexpected end");
    auto n = std::make_shared<Expr::Node>();
    if (t_[i_] == '(') {
      ++i_;
      NodePtr inner = sum();
      skip();
      if (i_ >= t_.size() || t_[i_] != ')') fail("missing ')'");
      ++i_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(t_[i_]))) {
      const std::size_t start = i_;
      while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
      n->value = Rational::parse(t_.substr(start, i_ - start));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_') {
      const std::size_t start = i_;
      while (i_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_')) ++i_;
      n->op = 'v';
      n->name = t_.substr(start, i_ - start);
      return n;
    }
    fail("unexpected '" + std::string(1, t_[i_]) + "'");
  }

  const std::string& t_;
  std::size_t i_ = 0;
};

Rational eval_node(const Expr::Node& n, const Bindings& vars, const std::string& text) {
  switch (n.op) {
    case 0:
      return n.value;
    case 'v': {
      const auto it = vars.find(n.name);
      if (it == vars.end()) throw SpecError("unbound variable \"" + n.name + "\" in \"" + text + "\"");
      return Rational(it->second);
    }
    case '~':
      return -eval_node(*n.a, vars, text);
    case '+':
      return eval_node(*n.a, vars, text) + eval_node(*n.b, vars, text);
    case '-':
      return eval_node(*n.a, vars, text) - eval_node(*n.b, vars, text);
    case '*':
      return eval_node(*n.a, vars, text) * eval_node(*n.b, vars, text);
    default: {
      const Rational d = eval_node(*n.b, vars, text);
      if (d.is_zero()) throw SpecError("division by zero in \"" + text + "\"");
      return eval_node(*n.a, vars, text) / d;
    }
  }
}

class FamilyParser {
 public:
  FamilyParser(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  Family parse() {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      const auto pos = position_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw SpecError(prefix(pos) + "malformed JSON");
    }
    if (!doc.is_object()) fail("", "the family must be a JSON object");
    for (const auto& [k, v] : doc.items()) {
      (void)v;
      static const std::set<std::string> allowed{"name", "base", "K", "ranges", "where", "checks", "sample"};
      if (!allowed.count(k)) fail("/" + k, "unknown field \"" + k + "\"");
    }
    Family f;
    f.source = doc;
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) fail("/name", "\"name\" must be a string");
      f.name = doc["name"].get<std::string>();
    }
    parse_base(doc, f);
    parse_ranges(doc, f);
    if (doc.contains("K")) parse_k(doc["K"], f);
    if (doc.contains("where")) {
      const json& w = doc["where"];
      if (!w.is_array()) fail("/where", "\"where\" must be an array of strings");
      for (std::size_t i = 0; i < w.size(); ++i) {
        const std::string ptr = "/where/" + std::to_string(i);
        if (!w[i].is_string()) fail(ptr, "constraints must be strings");
        f.where.push_back(guarded(ptr, [&] { return constraint(w[i].get<std::string>()); }));
      }
    }
    const json checks = doc.contains("checks") ? doc["checks"] : json::array({"extremal", "csc"});
    if (!checks.is_array() || checks.empty()) fail("/checks", "\"checks\" must be a nonempty array");
    static const std::set<std::string> known{"extremal", "csc", "equiv", "cohomology", "quotient"};
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (!checks[i].is_string() || !known.count(checks[i].get<std::string>())) {
        fail("/checks/" + std::to_string(i), "checks are extremal, csc, equiv, cohomology, quotient");
      }
      f.checks.push_back(checks[i].get<std::string>());
    }
    if (doc.contains("sample")) {
      const json& s = doc["sample"];
      if (!s.is_object() || !s.contains("count") || !s["count"].is_number_integer() || s["count"].get<long>() < 1) {
        fail("/sample", "\"sample\" needs a positive integer \"count\"");
      }
      std::uint64_t seed = 0;
      if (s.contains("seed")) {
        if (!s["seed"].is_number_unsigned()) fail("/sample/seed", "\"seed\" must be a nonnegative integer");
        seed = s["seed"].get<std::uint64_t>();
      }
      f.sample = std::make_pair(s["count"].get<long>(), seed);
    }
    // Every variable must be bound by a range.
    Bindings probe;
    for (const auto& [name, r] : f.ranges) probe[name] = r.first;
    for (const auto& [name, e] : f.params) guarded("/base/params/" + name, [&] { return e.eval(probe); });
    for (std::size_t j = 0; j < f.K.size(); ++j) {
      for (std::size_t i = 0; i < f.K[j].size(); ++i) {
        guarded("/K/" + std::to_string(j) + "/" + std::to_string(i), [&] { return f.K[j][i].eval(probe); });
      }
    }
    for (std::size_t i = 0; i < f.where.size(); ++i) {
      guarded("/where/" + std::to_string(i), [&] { return f.where[i].holds(probe); });
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw SpecError(prefix(locate_pointer(text_, ptr)) + msg);
  }
  std::string prefix(const TextPosition& p) const {
    return source_ + ":" + std::to_string(p.line) + ":" + std::to_string(p.column) + ": ";
  }
  template <class F>
  std::invoke_result_t<F> guarded(const std::string& ptr, F&& f) const {
    try {
      return f();
    } catch (const SpecError& e) {
      fail(ptr, e.what());
    } catch (const DomainError& e) {
      fail(ptr, e.what());
    }
  }

  Expr expr_of(const json& v, const std::string& ptr) const {
    if (v.is_number_integer()) return Expr::parse(std::to_string(v.get<long>()));
    if (v.is_string()) return guarded(ptr, [&] { return Expr::parse(v.get<std::string>()); });
    fail(ptr, "expected an integer or an expression string");
  }

  static Constraint constraint(const std::string& text) {
    static const char* ops[] = {"<=", ">=", "==", "!=", "<", ">"};
    for (const char* op : ops) {
      const auto at = text.find(op);
      if (at == std::string::npos) continue;
      return Constraint{Expr::parse(text.substr(0, at)), Expr::parse(text.substr(at + std::string(op).size())), op, text};
    }
    throw SpecError("constraint \"" + text + "\" has no comparison operator");
  }

  void parse_base(const json& doc, Family& f) const {
    if (!doc.contains("base") || !doc["base"].is_object()) fail("", "missing object field \"base\"");
    const json& b = doc["base"];
    for (const auto& [k, v] : b.items()) {
      (void)v;
      if (k != "kind" && k != "params") fail("/base/" + k, "unknown field \"" + k + "\"");
    }
    if (!b.contains("kind") || !b["kind"].is_string()) fail("/base", "\"base.kind\" must be a string");
    f.base_kind = b["kind"].get<std::string>();
    if (!b.contains("params")) return;
    if (!b["params"].is_object()) fail("/base/params", "\"base.params\" must be an object");
    for (const auto& [k, v] : b["params"].items()) {
      const std::string ptr = "/base/params/" + k;
      if (k == "degE_parity") {
        if (!v.is_string()) fail(ptr, "\"degE_parity\" must be \"even\" or \"odd\"");
        f.parity = v.get<std::string>();
      } else {
        f.params.emplace(k, expr_of(v, ptr));
      }
    }
  }

  void parse_ranges(const json& doc, Family& f) const {
    if (!doc.contains("ranges") || !doc["ranges"].is_object()) fail("", "missing object field \"ranges\"");
    for (const auto& [k, v] : doc["ranges"].items()) {
      const std::string ptr = "/ranges/" + k;
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        fail(ptr, "a range is [lo, hi] with integer bounds");
      }
      const long lo = v[0].get<long>(), hi = v[1].get<long>();
      if (lo > hi) fail(ptr, "empty range");
      f.ranges[k] = {lo, hi};
    }
  }

  void parse_k(const json& k, Family& f) const {
    if (!k.is_array()) fail("/K", "\"K\" must be an array of rows");
    for (std::size_t j = 0; j < k.size(); ++j) {
      const std::string rp = "/K/" + std::to_string(j);
      if (!k[j].is_array()) fail(rp, "K rows must be arrays");
      std::vector<Expr> row;
      for (std::size_t i = 0; i < k[j].size(); ++i) row.push_back(expr_of(k[j][i], rp + "/" + std::to_string(i)));
      f.K.push_back(std::move(row));
    }
  }

  const std::string& text_;
  std::string source_;
};

}  // namespace

Expr Expr::parse(const std::string& text) {
  Expr e;
  e.text_ = text;
  e.root_ = ExprParser(text).parse();
  return e;
}

Rational Expr::eval(const Bindings& vars) const { return eval_node(*root_, vars, text_); }

bool Constraint::holds(const Bindings& vars) const {
  const Rational a = lhs.eval(vars), b = rhs.eval(vars);
  if (op == "<") return a < b;
  if (op == "<=") return a <= b;
  if (op == ">") return a > b;
  if (op == ">=") return a >= b;
  if (op == "==") return a == b;
  return a != b;
}

std::vector<Bindings> Family::cells() const {
  std::vector<Bindings> out;
  const auto accept = [&](const Bindings& b) {
    for (const auto& c : where) {
      if (!c.holds(b)) return false;
    }
    return true;
  };
  if (sample) {
    std::mt19937_64 rng(sample->second);
    const long want = sample->first;
    // Bounded rejection sampling against the constraints.
    for (long attempts = 0; static_cast<long>(out.size()) < want && attempts < want * 1000; ++attempts) {
      Bindings b;
      for (const auto& [name, r] : ranges) b[name] = std::uniform_int_distribution<long>(r.first, r.second)(rng);
      if (accept(b)) out.push_back(std::move(b));
    }
    return out;
  }
  Bindings cur;
  for (const auto& [name, r] : ranges) cur[name] = r.first;
  while (true) {
    if (accept(cur)) out.push_back(cur);
    // Odometer over the sorted names, last name fastest.
    auto it = ranges.rbegin();
    for (; it != ranges.rend(); ++it) {
      long& v = cur[it->first];
      if (v < it->second.second) {
        ++v;
        break;
      }
      v = it->second.first;
    }
    if (it == ranges.rend()) return out;
  }
}

FiberJoinSpec Family::instantiate(const Bindings& vars) const {
  json pj = json::object();
  for (const auto& [k, e] : params) {
    const Rational v = e.eval(vars);
    if (!v.is_integer() || !v.num().fits_slong_p()) throw SpecError("parameter \"" + k + "\" is not a machine integer");
    pj[k] = v.num().get_si();
  }
  if (parity) pj["degE_parity"] = *parity;
  json doc = {{"base", {{"kind", base_kind}, {"params", pj}}}};
  if (!K.empty()) {
    json k = json::array();
    for (const auto& row : K) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.eval(vars).str());
      k.push_back(r);
    }
    doc["K"] = k;
  }
  return parse_spec(doc.dump(), "<cell>");
}

Family parse_family(const std::string& text, const std::string& source) { return FamilyParser(text, source).parse(); }

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot read family file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str(), path);
}

}  // namespace joincert::cli
