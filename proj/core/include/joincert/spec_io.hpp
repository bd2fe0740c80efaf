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

#ifndef JOINCERT_SPEC_IO_HPP
#define JOINCERT_SPEC_IO_HPP

#include <string>

#include "joincert/fiberjoin.hpp"

namespace joincert {

/// Parses a fiber-join spec document:
///
///   {"base": {"kind": "surface", "params": {"genus": 2}},
///    "K": [["3"], ["1"]],
///    "d": 1}
///
/// kind is one of surface, surface_product, cp1xcp1, polystable_ruled,
/// example38, example39. K entries are strings holding exact rationals;
/// rows are line bundles. Unknown keys are rejected. Errors are SpecError
/// with a "source:line:column: " prefix.
FiberJoinSpec parse_spec(const std::string& text, const std::string& source = "<spec>");

/// Reads and parses a file; SpecError if it cannot be read.
FiberJoinSpec load_spec(const std::string& path);

/// Canonical JSON form (sorted keys, rationals as strings).
std::string spec_to_json(const FiberJoinSpec& spec);

/// 1-based line and column of a JSON pointer inside a document, or of the
/// closest existing ancestor.
struct TextPosition {
  int line = 1;
  int column = 1;
};
TextPosition locate_pointer(const std::string& text, const std::string& pointer);

/// Line and column of a byte offset.
TextPosition position_of_offset(const std::string& text, std::size_t offset);

}  // namespace joincert

#endif  // JOINCERT_SPEC_IO_HPP
