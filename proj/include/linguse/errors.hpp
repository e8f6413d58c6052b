// Copyright 2026 The linguse Authors
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
#pragma once

#include <stdexcept>
#include <string>

namespace linguse {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric argument lies outside the domain of a linguistic operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed questionnaire payload, dataset record or project mutation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown label, criterion or scale entry in a configuration file.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Pairwise judgments fail the consistency gate or fully dominate every
/// criterion. Carries the index that was computed.
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& what, double ci) : Error(what), ci_(ci) {}
  double consistency_index() const noexcept { return ci_; }

 private:
  double ci_;
};

/// Missing or unknown bearer token.
class AuthenticationError : public Error {
 public:
  using Error::Error;
};

class AuthorizationError : public Error {
 public:
  using Error::Error;
};

/// Duplicate submission for an already answered (user, role, alternative, test).
class ConflictError : public Error {
 public:
  using Error::Error;
};

/// Operation not allowed in the current project lifecycle state.
class StateError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace linguse
