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

#include "fibquasi/fib.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "fibquasi/error.hpp"

namespace fibquasi {
namespace {

void require_materializable(unsigned n, const FibLimits& limits) {
  if (n > limits.max_materialized) {
    throw Error(ErrorCode::kMaterializationGuard,
                "F_" + std::to_string(n) + " exceeds the materialization limit N_max = " +
                    std::to_string(limits.max_materialized));
  }
}

}  // namespace

FibLimits FibLimits::from_env() {
  FibLimits limits;
  const char* raw = std::getenv("FIBQUASI_NMAX");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string_view text(raw);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value > kMaxLengthIndex) {
    throw Error(ErrorCode::kConfig, "FIBQUASI_NMAX must be an integer in [0, " +
                                        std::to_string(kMaxLengthIndex) + "], got '" +
                                        std::string(text) + "'");
  }
  limits.max_materialized = value;
  return limits;
}

std::uint64_t fib_len(unsigned n) {
  if (n > kMaxLengthIndex) {
    throw Error(ErrorCode::kLengthOverflow,
                "|F_" + std::to_string(n) + "| does not fit the exact range n <= " +
                    std::to_string(kMaxLengthIndex));
  }
  std::uint64_t prev = 1, cur = 1;  // |F_0|, |F_1|
  for (unsigned i = 1; i < n; ++i) {
    const std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<Word> fib_words_upto(unsigned n, const FibLimits& limits) {
  require_materializable(n, limits);
  std::vector<Word> words;
  words.reserve(n + 1);
  words.emplace_back("b");
  if (n >= 1) words.emplace_back("a");
  for (unsigned i = 2; i <= n; ++i) words.push_back(words[i - 1] + words[i - 2]);
  return words;
}

FibWord fib_word(unsigned n, const FibLimits& limits) {
  require_materializable(n, limits);
  Word older("b"), newer("a");
  if (n == 0) return {0, older};
  for (unsigned i = 2; i <= n; ++i) {
    Word next = newer + older;
    older = std::move(newer);
    newer = std::move(next);
  }
  return {n, std::move(newer)};
}

Decomposition decompose(unsigned k, const FibLimits& limits) {
  if (k < 2) {
    throw Error(ErrorCode::kDomain,
                "P_k delta_k decomposition needs k >= 2, got " + std::to_string(k));
  }
  require_materializable(k, limits);
  const std::vector<Word> fib = fib_words_upto(k, limits);
  Decomposition d;
  for (unsigned i = k - 2; i >= 1; --i) d.p_part += fib[i];
  d.delta = Word(k % 2 == 0 ? "ab" : "ba");
  if (d.p_part + d.delta != fib[k]) {
    throw std::logic_error("P_k delta_k != F_k at k = " + std::to_string(k));
  }
  return d;
}

Expansion expansion(unsigned n, unsigned m, RewriteOrder order, const FibLimits& limits) {
  if (n < 2 || m < 1 || m > n - 1) {
    throw Error(ErrorCode::kDomain, "expansion needs n >= 2 and 1 <= m <= n - 1, got n = " +
                                        std::to_string(n) + ", m = " + std::to_string(m));
  }
  require_materializable(n, limits);

  // Rewriting F_i -> F_{i-1} F_{i-2} for i > m. Leftmost-first keeps a stack
  // whose top is the leftmost unresolved factor; rightmost-first resolves from
  // the other end and reverses at the end.
  std::vector<unsigned> indices;
  std::vector<unsigned> pending{n};
  while (!pending.empty()) {
    const unsigned i = pending.back();
    pending.pop_back();
    if (i <= m) {
      indices.push_back(i);
      continue;
    }
    if (order == RewriteOrder::kLeftmostFirst) {
      pending.push_back(i - 2);
      pending.push_back(i - 1);
    } else {
      pending.push_back(i - 1);
      pending.push_back(i - 2);
    }
  }
  if (order == RewriteOrder::kRightmostFirst) std::reverse(indices.begin(), indices.end());

  Expansion out{n, m, {}};
  out.items.reserve(indices.size());
  std::size_t start = 1;
  for (unsigned i : indices) {
    out.items.push_back({i == m ? FactorKind::kBig : FactorKind::kSmall, start});
    start += static_cast<std::size_t>(fib_len(i));
  }
  return out;
}

bool is_fib_border(unsigned n, unsigned k) noexcept {
  return n >= 3 && k >= 1 && k + 2 <= n && (n - k) % 2 == 0;
}

PositionSet expansion_rule_positions(unsigned n, unsigned m, const FibLimits& limits) {
  const Expansion e = expansion(n, m, RewriteOrder::kLeftmostFirst, limits);
  PositionSet starts;
  starts.reserve(e.items.size());
  for (const ExpansionItem& item : e.items) starts.push_back(item.start);
  if (e.items.back().kind == FactorKind::kSmall && is_fib_border(n, m - 1)) {
    starts.pop_back();
  }
  return starts;
}

PositionSet fib_occurrences(unsigned n, unsigned m, const FibLimits& limits) {
  if (m < 3 || m + 2 > n) {
    throw Error(ErrorCode::kDomain, "expansion placement needs 3 <= m <= n - 2, got n = " +
                                        std::to_string(n) + ", m = " + std::to_string(m));
  }
  return expansion_rule_positions(n, m, limits);
}

}  // namespace fibquasi
