// Copyright 2026 The fibquasi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fibquasi/error.hpp"

namespace fibquasi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptyPattern: return "empty-pattern";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kInvalidAlphabet: return "invalid-alphabet";
    case ErrorCode::kOverlapMismatch: return "overlap-mismatch";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kLengthOverflow: return "length-overflow";
    case ErrorCode::kMaterializationGuard: return "materialization-guard";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNotAFactor: return "not-a-factor";
    case ErrorCode::kSizeRefused: return "size-refused";
    case ErrorCode::kCapExceeded: return "cap-exceeded";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace fibquasi
