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

#ifndef JOINCERT_ERRORS_HPP
#define JOINCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace joincert {

/// Caller supplied something outside an operation's domain (|c| >= 1,
/// a zero divisor, non-coprime weights, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A real-root count was requested on an interval whose endpoint is a root.
/// Kept apart from DomainError so callers can deflate and retry.
class BoundaryRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fiber-join description failed validation.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must hold by construction did not. This is a
/// bug in the library, never a user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace joincert

#endif  // JOINCERT_ERRORS_HPP
