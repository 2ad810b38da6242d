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

#ifndef SRDI_ERROR_HPP_
#define SRDI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace srdi {

enum class ErrorCode {
  kEmptyTree,
  kCycleDetected,
  kDisconnectedNode,
  kDuplicateChild,
  kMultipleRoots,
  kDuplicateEdgeId,
  kBadEdgeId,
  kAttrBoundsViolated,
  kMissingEdgeWeight,
  kNegativeBudget,
  kNOutOfRange,
  kInstanceTooLarge,
  kUnknownProblemTag,
  kDemandOutOfRange,
  kSyntaxError,
  kBoundViolation,
  kMissingHeader,
  kBadConfig,
  kMissingParam,
  kIo,
};

std::string_view to_string(ErrorCode code);

// The single exception type thrown by the library. `line()` is the 1-based
// input line for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace srdi

#endif  // SRDI_ERROR_HPP_
