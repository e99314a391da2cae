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

#include "cokeep/error.hpp"

#include <utility>

namespace cokeep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kArityError: return "ArityError";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kWouldBeEmpty: return "WouldBeEmpty";
    case ErrorCode::kNotACograph: return "NotACograph";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotKConnected: return "NotKConnected";
    case ErrorCode::kNotKEdgeConnected: return "NotKEdgeConnected";
    case ErrorCode::kNotMaximallyConnected: return "NotMaximallyConnected";
    case ErrorCode::kNotSuper: return "NotSuper";
    case ErrorCode::kIsKm: return "IsKm";
    case ErrorCode::kDegreeTooLow: return "DegreeTooLow";
    case ErrorCode::kBoundViolated: return "BoundViolated";
    case ErrorCode::kPartTooSmall: return "PartTooSmall";
    case ErrorCode::kMissingCrossEdge: return "MissingCrossEdge";
    case ErrorCode::kParamViolation: return "ParamViolation";
    case ErrorCode::kBadSpec: return "BadSpec";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kPostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

namespace {

std::string witness_message(const std::array<Vertex, 4>& w) {
  return "graph is not a cograph: induced P4 " + std::to_string(w[0]) + "-" +
         std::to_string(w[1]) + "-" + std::to_string(w[2]) + "-" +
         std::to_string(w[3]);
}

}  // namespace

NotACographError::NotACographError(std::array<Vertex, 4> witness)
    : Error(ErrorCode::kNotACograph, witness_message(witness)),
      witness_(witness) {}

BoundViolatedError::BoundViolatedError(std::string case_label,
                                       int required_degree, int actual_degree)
    : Error(ErrorCode::kBoundViolated,
            case_label + ": minimum degree " + std::to_string(actual_degree) +
                " is below the required " + std::to_string(required_degree)),
      case_label_(std::move(case_label)),
      required_degree_(required_degree),
      actual_degree_(actual_degree) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cokeep
