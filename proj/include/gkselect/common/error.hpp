// Copyright 2026 The gkselect Authors
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

namespace gks {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyReduce,
  kInvalidRoute,
  kInvalidRank,
  kEmptySummary,
  kInvalidMerge,
  kEmptyInput,
  kCorruptData,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can distinguish them without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kEmptyReduce: return "empty-reduce";
    case ErrorCode::kInvalidRoute: return "invalid-route";
    case ErrorCode::kInvalidRank: return "invalid-rank";
    case ErrorCode::kEmptySummary: return "empty-summary";
    case ErrorCode::kInvalidMerge: return "invalid-merge";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kCorruptData: return "corrupt-data";
  }
  return "unknown";
}

}  // namespace gks
