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

#ifndef FIBQUASI_FIB_HPP_
#define FIBQUASI_FIB_HPP_

#include <cstdint>
#include <vector>

#include "fibquasi/word.hpp"

namespace fibquasi {

// Largest index whose length fits the exact 64-bit length recurrence.
inline constexpr unsigned kMaxLengthIndex = 90;
inline constexpr unsigned kDefaultMaxMaterialized = 30;

// Materialization guard. |F_30| = 1,346,269 letters.
struct FibLimits {
  unsigned max_materialized = kDefaultMaxMaterialized;

  // Reads FIBQUASI_NMAX when set; throws Error(kConfig) if it does not parse
  // as an integer in [0, kMaxLengthIndex].
  static FibLimits from_env();
};

// |F_n| for n <= 90 without materializing anything. Error(kLengthOverflow)
// beyond that.
std::uint64_t fib_len(unsigned n);

struct FibWord {
  unsigned index = 0;
  Word word;
};

// F_0 = b, F_1 = a, F_n = F_{n-1} F_{n-2}; built iteratively.
FibWord fib_word(unsigned n, const FibLimits& limits = {});

// F_0 .. F_n, index-aligned.
std::vector<Word> fib_words_upto(unsigned n, const FibLimits& limits = {});

// F_k = P_k . delta_k with P_k = F_{k-2} F_{k-3} ... F_1 (empty for k = 2)
// and delta_k = "ab" for even k, "ba" for odd k.
struct Decomposition {
  Word p_part;
  Word delta;
};

Decomposition decompose(unsigned k, const FibLimits& limits = {});

enum class FactorKind { kBig, kSmall };  // F_m or F_{m-1}

struct ExpansionItem {
  FactorKind kind;
  std::size_t start;  // 1-based

  friend bool operator==(const ExpansionItem&, const ExpansionItem&) = default;
};

// The F_m,F_{m-1} expansion of F_n: F_n tiled by copies of F_m (kBig) and
// F_{m-1} (kSmall), obtained by unfolding the recurrence until every factor
// has index m or m-1.
struct Expansion {
  unsigned n = 0;
  unsigned base = 0;  // m
  std::vector<ExpansionItem> items;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

enum class RewriteOrder { kLeftmostFirst, kRightmostFirst };

// Requires 2 <= n <= max_materialized and 1 <= m <= n - 1; Error(kDomain)
// otherwise. Only lengths are used, so nothing is materialized.
Expansion expansion(unsigned n, unsigned m,
                    RewriteOrder order = RewriteOrder::kLeftmostFirst,
                    const FibLimits& limits = {});

// Parity rule for the borders of Fibonacci words: F_k is a nonempty proper
// border of F_n iff n >= 3, 1 <= k <= n - 2 and n - k is even.
bool is_fib_border(unsigned n, unsigned k) noexcept;

// Start positions of every expansion item, minus the final F_{m-1} item when
// F_{m-1} is a border of F_n. No domain restriction on m beyond the expansion
// itself; this is the raw placement rule, exposed so its failure at m = 2 can
// be demonstrated.
PositionSet expansion_rule_positions(unsigned n, unsigned m,
                                     const FibLimits& limits = {});

// Occurrences of F_m in F_n without scanning. Requires 3 <= m <= n - 2;
// Error(kDomain) otherwise (the rule is wrong at m = 2, use occurrences()).
PositionSet fib_occurrences(unsigned n, unsigned m, const FibLimits& limits = {});

}  // namespace fibquasi

#endif  // FIBQUASI_FIB_HPP_
