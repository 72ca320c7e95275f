// Copyright 2026 The Kempe Authors
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
#include <string_view>

namespace kempe {

// Stable error codes; the C API and CLI expose these verbatim.
enum class ErrorCode {
  kOk = 0,
  kParse,
  kInvalidGraph,
  kMissingEdgeColor,
  kColorOutOfRange,
  kNotProper,
  kEqualColors,
  kRepEdgeNotBicolored,
  kEdgeNotIncident,
  kNotSaturated,
  kInvalidMove,
  kPaletteTooSmall,
  kPaletteMismatch,
  kMaxDegreeSubgraphCyclic,
  kPreconditionViolated,
  kBadWindow,
  kDistanceConditionViolated,
  kNotRegular4,
  kTargetNotProper4,
  kClaimViolated,
  kWrongMaxDegree,
  kNoFreeLowColor,
  kProjectionMismatch,
  kSearchBudgetExceeded,
  kBudgetExceeded,
  kUnsupportedFamily,
  kInfeasibleN,
  kIo,
  kTerminalMismatch,
  kInvalidArgument,
  kInternal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by apply_transcript; carries the failing move index.
class InvalidMoveError : public Error {
 public:
  InvalidMoveError(std::size_t index, const std::string& reason)
      : Error(ErrorCode::kInvalidMove,
              "move " + std::to_string(index) + ": " + reason),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace kempe
