// Copyright 2026 The srdi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srdi/error.hpp"

namespace srdi {
namespace {

std::string decorate(ErrorCode code, const std::string& message, int line) {
  std::string out(to_string(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyTree: return "EmptyTree";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kDisconnectedNode: return "DisconnectedNode";
    case ErrorCode::kDuplicateChild: return "DuplicateChild";
    case ErrorCode::kMultipleRoots: return "MultipleRoots";
    case ErrorCode::kDuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::kBadEdgeId: return "BadEdgeId";
    case ErrorCode::kAttrBoundsViolated: return "AttrBoundsViolated";
    case ErrorCode::kMissingEdgeWeight: return "MissingEdgeWeight";
    case ErrorCode::kNegativeBudget: return "NegativeBudget";
    case ErrorCode::kNOutOfRange: return "NOutOfRange";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kUnknownProblemTag: return "UnknownProblemTag";
    case ErrorCode::kDemandOutOfRange: return "DemandOutOfRange";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kMissingHeader: return "MissingHeader";
    case ErrorCode::kBadConfig: return "BadConfig";
    case ErrorCode::kMissingParam: return "MissingParam";
    case ErrorCode::kIo: return "IO";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, int line)
    : std::runtime_error(decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace srdi
