// Copyright 2026 The hdconc Authors.
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

namespace hdconc {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Argument = 2,
  Resource = 3,
  Degenerate = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

/// Invalid arguments, violated preconditions, divergent MGF windows.
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorKind::Argument, what) {}
};

/// Refusal because a desk-scale resource cap would be exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::Resource, what) {}
};

/// Input is well-formed but degenerate (zero points, coincident pairs).
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : Error(ErrorKind::Degenerate, what) {}
};

namespace detail {
inline void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}
}  // namespace detail

}  // namespace hdconc
