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

#ifndef JOINCERT_TOOLS_FAMILY_HPP
#define JOINCERT_TOOLS_FAMILY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "joincert/fiberjoin.hpp"

namespace joincert::cli {

using Bindings = std::map<std::string, long>;

/// Arithmetic over Q in named integer variables: + - * / and parentheses.
class Expr {
 public:
  static Expr parse(const std::string& text);
  Rational eval(const Bindings& vars) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// A comparison "lhs op rhs", op one of < <= > >= == !=.
struct Constraint {
  Expr lhs, rhs;
  std::string op;
  std::string text;
  bool holds(const Bindings& vars) const;
};

/// A parameter family:
///
///   {"base": {"kind": "surface", "params": {"genus": "g"}},
///    "K": [["k1"], ["k2"]],
///    "ranges": {"g": [1, 6], "k1": [1, 12], "k2": [1, 12]},
///    "where": ["k2 < k1"],
///    "checks": ["extremal", "csc"],
///    "sample": {"count": 25, "seed": 7}}
///
/// Params and K entries are integers or expression strings. Without
/// "sample" every cell of the grid is visited in lexicographic order of
/// the sorted variable names; with it, count cells are drawn uniformly
/// from the ranges.
struct Family {
  std::string name;
  std::string base_kind;
  std::map<std::string, Expr> params;
  std::optional<std::string> parity;
  std::vector<std::vector<Expr>> K;
  std::map<std::string, std::pair<long, long>> ranges;
  std::vector<Constraint> where;
  std::vector<std::string> checks;
  std::optional<std::pair<long, std::uint64_t>> sample;
  nlohmann::json source;

  std::vector<Bindings> cells() const;
  /// The spec at one cell. SpecError if it is invalid.
  FiberJoinSpec instantiate(const Bindings& vars) const;
};

Family parse_family(const std::string& text, const std::string& source = "<family>");
Family load_family(const std::string& path);

}  // namespace joincert::cli

#endif  // JOINCERT_TOOLS_FAMILY_HPP
