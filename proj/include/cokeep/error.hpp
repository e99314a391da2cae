// Copyright 2026 The cokeep Authors
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

#ifndef COKEEP_ERROR_HPP_
#define COKEEP_ERROR_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cokeep {

using Vertex = int;

enum class ErrorCode {
  kInvalidArgument,
  kIoError,
  kSyntaxError,
  kArityError,
  kEmptySet,
  kUnknownVertex,
  kUnknownEdge,
  kWouldBeEmpty,
  kNotACograph,
  kNotConnected,
  kNotKConnected,
  kNotKEdgeConnected,
  kNotMaximallyConnected,
  kNotSuper,
  kIsKm,
  kDegreeTooLow,
  kBoundViolated,
  kPartTooSmall,
  kMissingCrossEdge,
  kParamViolation,
  kBadSpec,
  kTooLarge,
  kDisconnected,
  kPostconditionFailed,
};

// Stable CamelCase name, e.g. "BoundViolated".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::kSyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when an input graph contains an induced P4.
class NotACographError : public Error {
 public:
  explicit NotACographError(std::array<Vertex, 4> witness);

  const std::array<Vertex, 4>& witness() const { return witness_; }

 private:
  std::array<Vertex, 4> witness_;
};

// Raised when a construction is asked to run below its minimum-degree bound.
class BoundViolatedError : public Error {
 public:
  BoundViolatedError(std::string case_label, int required_degree,
                     int actual_degree);

  const std::string& case_label() const { return case_label_; }
  int required_degree() const { return required_degree_; }
  int actual_degree() const { return actual_degree_; }

 private:
  std::string case_label_;
  int required_degree_;
  int actual_degree_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Internal consistency check; a failure indicates a bug, never bad input.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::kPostconditionFailed, what);
}

}  // namespace cokeep

#endif  // COKEEP_ERROR_HPP_
