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

#ifndef JOINCERT_TOOLS_COMMANDS_HPP
#define JOINCERT_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "family.hpp"
#include "joincert/fiberjoin.hpp"

namespace joincert::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// One computation on one spec. command is extremal, csc, quotient,
/// cohomology or equiv.
struct Request {
  std::string command;
  std::optional<Rational> c;
  std::optional<std::pair<Integer, Integer>> w;
  bool all_rays = false;
  std::optional<Rational> tolerance;
  /// extremal --c/--w: also report p at this z.
  std::optional<Rational> probe;

  json to_json() const;
  static Request from_json(const json& j);
};

/// "2^-k" or p/q with q a power of two, in (0, 1).
Rational parse_dyadic(const std::string& text);
/// "A,B" with A, B coprime positive integers.
std::pair<Integer, Integer> parse_weights(const std::string& text);

/// Worker count from JOINCERT_WORKERS; 1 when unset. DomainError if it is
/// not a positive integer.
int workers_from_env();

/// The sealed report: every verdict and the report itself carry digests.
json run_request(const FiberJoinSpec& spec, const Request& req);

/// Runs every cell of a family; cells are independent and the report is
/// assembled in cell order.
json run_scan(const Family& family, int workers);

struct ReplayResult {
  int reports = 0;
  int verdicts = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty() && reports > 0; }
};

/// Recomputes a report (or only the parts holding digest) and compares
/// digests.
ReplayResult replay(const json& report, const std::optional<std::string>& digest, int workers);

/// Recomputes and stores the digests.
void seal(json& report);

std::string render_text(const json& report);

}  // namespace joincert::cli

#endif  // JOINCERT_TOOLS_COMMANDS_HPP
