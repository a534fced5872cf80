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

#include "fibquasi/quasi.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "fibquasi/error.hpp"

namespace fibquasi {
namespace {

void require_nonempty(const Word& y, const char* what) {
  if (y.empty()) throw Error(ErrorCode::kEmptyInput, std::string(what) + " of the empty word");
}

void require_size(const Word& y, const EngineOptions& options, const char* what) {
  if (!options.force && y.size() > kMaxOracleInput) {
    throw Error(ErrorCode::kSizeRefused,
                std::string(what) + " refuses inputs longer than " +
                    std::to_string(kMaxOracleInput) + " letters (got " +
                    std::to_string(y.size()) + "); pass force to override");
  }
}

void require_seed_candidate(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "seed test with the empty word");
  if (!is_factor(u, y)) {
    throw Error(ErrorCode::kNotAFactor, "\"" + u.str() + "\" does not occur in the input");
  }
}

// Calls fn on every distinct factor of `text` with length in [1, max_len],
// in canonical (length, lexicographic) order. Only one length bucket is held
// in memory at a time.
void for_each_distinct_factor(std::string_view text, std::size_t max_len,
                              const std::function<void(std::string_view)>& fn) {
  max_len = std::min(max_len, text.size());
  std::vector<std::string_view> bucket;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::unordered_set<std::string_view> seen;
    bucket.clear();
    for (std::size_t i = 0; i + len <= text.size(); ++i) {
      const std::string_view f = text.substr(i, len);
      if (seen.insert(f).second) bucket.push_back(f);
    }
    std::sort(bucket.begin(), bucket.end());
    for (std::string_view f : bucket) fn(f);
  }
}

}  // namespace

WordSet covers_of(const Word& y) {
  require_nonempty(y, "covers");
  WordSet out;
  for (const Word& b : borders(y)) {
    if (is_cover(b, y)) out.insert(b);
  }
  out.insert(y);
  return out;
}

WordSet covers_by_chain(const Word& y) {
  require_nonempty(y, "covers");
  WordSet out{y};
  Word current = y;
  for (;;) {
    const WordSet candidates = borders(current);
    // Longest border of `current` that also covers it.
    auto it = std::find_if(std::make_reverse_iterator(candidates.end()),
                           std::make_reverse_iterator(candidates.begin()),
                           [&](const Word& b) { return bool(is_cover(b, current)); });
    if (it == std::make_reverse_iterator(candidates.begin())) break;
    current = *it;
    out.insert(current);
  }
  return out;
}

WordSet left_seeds_of(const Word& y) {
  require_nonempty(y, "left seeds");
  const std::size_t period = period_of(y);
  WordSet out;
  for (std::size_t len = 1; len <= y.size(); ++len) {
    Word z = y.prefix(len);
    if (covered_prefix_extent(z, y) >= period) out.insert(std::move(z));
  }
  return out;
}

WordSet left_seeds_by_extension(const Word& y) {
  require_nonempty(y, "left seeds");
  WordSet out;
  for (std::size_t len = 1; len <= y.size(); ++len) {
    Word z = y.prefix(len);
    for (std::size_t ext = 0; ext < len; ++ext) {
      if (is_cover(z, y + z.suffix(ext))) {
        out.insert(std::move(z));
        break;
      }
    }
  }
  return out;
}

WordSet right_seeds_of(const Word& y) {
  require_nonempty(y, "right seeds");
  const std::size_t period = period_of(y);
  WordSet out;
  for (std::size_t len = 1; len <= y.size(); ++len) {
    Word z = y.suffix(len);
    if (covered_suffix_extent(z, y) >= period) out.insert(std::move(z));
  }
  return out;
}

WordSet right_seeds_by_extension(const Word& y) {
  require_nonempty(y, "right seeds");
  WordSet out;
  for (std::size_t len = 1; len <= y.size(); ++len) {
    Word z = y.suffix(len);
    for (std::size_t ext = 0; ext < len; ++ext) {
      if (is_cover(z, z.prefix(ext) + y)) {
        out.insert(std::move(z));
        break;
      }
    }
  }
  return out;
}

SeedResult is_seed(const Word& u, const Word& y) {
  require_seed_candidate(u, y);
  const std::size_t m = u.size();
  const std::string_view us = u.view();
  const std::string_view ys = y.view();

  // A covered word starts and ends with u. For a left extension of length a,
  // the first occurrence is u[1..a] . y[1..m-a]; decide that cheaply when it
  // lies inside y and leave the rare longer case to the full check.
  enum class Fit { kNo, kYes, kUnknown };
  std::vector<Fit> head(m), tail(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (m - a > ys.size()) {
      head[a] = tail[a] = Fit::kUnknown;
      continue;
    }
    head[a] = ys.substr(0, m - a) == us.substr(a) ? Fit::kYes : Fit::kNo;
    tail[a] = ys.substr(ys.size() - (m - a)) == us.substr(0, m - a) ? Fit::kYes : Fit::kNo;
  }

  for (std::size_t total = 0; total + 1 < 2 * m; ++total) {
    for (std::size_t a = 0; a <= std::min(total, m - 1); ++a) {
      const std::size_t b = total - a;
      if (b >= m || head[a] == Fit::kNo || tail[b] == Fit::kNo) continue;
      Word left = u.prefix(a);
      Word right = u.suffix(b);
      CoverResult cover = is_cover(u, left + y + right);
      if (cover) {
        return {true, SeedWitness{std::move(left), std::move(right), std::move(*cover.witness)}};
      }
    }
  }
  return {};
}

bool is_seed_fast(const Word& u, const Word& y) {
  require_seed_candidate(u, y);
  const PositionSet starts = occurrences(u, y);
  const std::size_t m = u.size();
  const std::size_t n = y.size();
  const std::string_view us = u.view();
  const std::string_view ys = y.view();

  for (std::size_t i = 1; i < starts.size(); ++i) {
    if (starts[i] - starts[i - 1] > m) return false;
  }

  const std::size_t head_gap = starts.front() - 1;
  if (head_gap > 0) {
    bool fits = false;
    for (std::size_t e = head_gap; e < m && e <= n && !fits; ++e) {
      fits = std::equal(ys.begin(), ys.begin() + e, us.end() - e);
    }
    if (!fits) return false;
  }

  const std::size_t tail_gap = n - (starts.back() + m - 1);
  if (tail_gap > 0) {
    bool fits = false;
    for (std::size_t e = tail_gap; e < m && e <= n && !fits; ++e) {
      fits = std::equal(ys.end() - e, ys.end(), us.begin());
    }
    if (!fits) return false;
  }
  return true;
}

WordSet distinct_factors(const Word& y) {
  WordSet out;
  for_each_distinct_factor(y.view(), y.size(),
                           [&](std::string_view f) { out.insert(Word(f)); });
  return out;
}

WordSet seeds_of(const Word& y, const EngineOptions& options) {
  require_nonempty(y, "seeds");
  require_size(y, options, "seeds");
  const bool cross_check = y.size() <= kSeedCrossCheckLength;
  WordSet out;
  for_each_distinct_factor(y.view(), y.size(), [&](std::string_view f) {
    Word u(f);
    const bool fast = is_seed_fast(u, y);
    if (cross_check && fast != is_seed(u, y).is_seed) {
      throw std::logic_error("seed criteria disagree on \"" + u.str() + "\" in \"" +
                             y.str() + "\"");
    }
    if (fast) out.insert(std::move(u));
  });
  return out;
}

bool is_circular_cover(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "circular cover test with empty word");
  const std::size_t n = y.size();
  const std::size_t m = u.size();
  if (m > n) {
    throw Error(ErrorCode::kOutOfRange, "circular cover candidate longer than the word");
  }
  const Word doubled = y + y;
  // Difference array over residues 0..n-1; an occurrence covers m <= n
  // consecutive residues, possibly wrapping once.
  std::vector<int> delta(n + 1, 0);
  for (std::size_t p : occurrences(u, doubled)) {
    if (p > n) break;
    const std::size_t s = p - 1;
    const std::size_t e = s + m;  // exclusive
    if (e <= n) {
      ++delta[s];
      --delta[e];
    } else {
      ++delta[s];
      --delta[n];
      ++delta[0];
      --delta[e - n];
    }
  }
  int running = 0;
  for (std::size_t r = 0; r < n; ++r) {
    running += delta[r];
    if (running == 0) return false;
  }
  return true;
}

WordSet circular_covers_of(const Word& y, CircularUniverse universe,
                           const EngineOptions& options) {
  require_nonempty(y, "circular covers");
  require_size(y, options, "circular covers");
  const Word source = universe == CircularUniverse::kLinearFactors ? y : y + y;
  WordSet out;
  for_each_distinct_factor(source.view(), y.size(), [&](std::string_view f) {
    Word u(f);
    if (is_circular_cover(u, y)) out.insert(std::move(u));
  });
  return out;
}

}  // namespace fibquasi
