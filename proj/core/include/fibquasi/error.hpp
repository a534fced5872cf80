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

#ifndef FIBQUASI_ERROR_HPP_
#define FIBQUASI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibquasi {

enum class ErrorCode {
  kEmptyPattern,
  kEmptyInput,
  kInvalidAlphabet,
  kOverlapMismatch,
  kOutOfRange,
  kLengthOverflow,
  kMaterializationGuard,
  kDomain,
  kNotAFactor,
  kSizeRefused,
  kCapExceeded,
  kBudgetExceeded,
  kConfig,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every precondition violation in the library surfaces as this type; callers
// that need to map failures onto exit codes switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fibquasi

#endif  // FIBQUASI_ERROR_HPP_
