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

#ifndef FIBQUASI_CLI_CLI_HPP_
#define FIBQUASI_CLI_CLI_HPP_

#include <cstddef>
#include <iosfwd>

namespace fibquasi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Longest word accepted by `analyze` without --force.
inline constexpr std::size_t kMaxInputLetters = 1'000'000;

// Runs one command line. argv[0] is the program name. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibquasi::cli

#endif  // FIBQUASI_CLI_CLI_HPP_
