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

#include "fibquasi/word.hpp"

#include <algorithm>
#include <string>

#include "fibquasi/error.hpp"

namespace fibquasi {

Word::Word(std::string_view text) : letters_(text) {
  auto bad = std::find_if(letters_.begin(), letters_.end(),
                          [](char c) { return c != 'a' && c != 'b'; });
  if (bad != letters_.end()) {
    throw Error(ErrorCode::kInvalidAlphabet,
                "letter '" + std::string(1, *bad) + "' at position " +
                    std::to_string(bad - letters_.begin() + 1) +
                    " is not in {a, b}");
  }
}

Letter Word::at(std::size_t position) const {
  if (position == 0 || position > letters_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "position " + std::to_string(position) + " outside [1, " +
                    std::to_string(letters_.size()) + "]");
  }
  return static_cast<Letter>(letters_[position - 1]);
}

Word Word::slice(std::size_t first, std::size_t last) const {
  if (first == 0 || last > letters_.size() || last + 1 < first) {
    throw Error(ErrorCode::kOutOfRange,
                "slice [" + std::to_string(first) + ", " + std::to_string(last) +
                    "] of a word of length " + std::to_string(letters_.size()));
  }
  return Word(Unchecked{}, letters_.substr(first - 1, last + 1 - first));
}

Word Word::prefix(std::size_t length) const {
  if (length > letters_.size()) {
    throw Error(ErrorCode::kOutOfRange, "prefix longer than word");
  }
  return Word(Unchecked{}, letters_.substr(0, length));
}

Word Word::suffix(std::size_t length) const {
  if (length > letters_.size()) {
    throw Error(ErrorCode::kOutOfRange, "suffix longer than word");
  }
  return Word(Unchecked{}, letters_.substr(letters_.size() - length));
}

Word Word::reversed() const {
  return Word(Unchecked{}, std::string(letters_.rbegin(), letters_.rend()));
}

bool Word::starts_with(const Word& w) const noexcept {
  return view().starts_with(w.view());
}

bool Word::ends_with(const Word& w) const noexcept {
  return view().ends_with(w.view());
}

Word& Word::operator+=(const Word& rhs) {
  letters_ += rhs.letters_;
  return *this;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return lhs.view().compare(rhs.view()) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.view();
}

WordSet WordSet::minus(const WordSet& other) const {
  WordSet out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::inserter(out.members_, out.members_.end()));
  return out;
}

WordSet WordSet::reversed_members() const {
  WordSet out;
  for (const Word& w : members_) out.insert(w.reversed());
  return out;
}

std::vector<std::string> WordSet::strings() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (const Word& w : members_) out.push_back(w.str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const WordSet& set) {
  os << '{';
  bool first = true;
  for (const Word& w : set) {
    os << (first ? "" : ", ") << '"' << w << '"';
    first = false;
  }
  return os << '}';
}

bool is_factor(const Word& u, const Word& y) {
  return y.view().find(u.view()) != std::string_view::npos;
}

PositionSet occurrences(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "occurrences of the empty word");
  PositionSet starts;
  if (u.size() > y.size()) return starts;
  const std::string_view text = y.view();
  const std::string_view pattern = u.view();
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    std::size_t j = 0;
    while (j < pattern.size() && text[i + j] == pattern[j]) ++j;
    if (j == pattern.size()) starts.push_back(i + 1);
  }
  return starts;
}

WordSet borders(const Word& y) {
  if (y.empty()) throw Error(ErrorCode::kEmptyInput, "borders of the empty word");
  WordSet out;
  const std::string_view s = y.view();
  for (std::size_t len = 1; len < s.size(); ++len) {
    if (s.substr(0, len) == s.substr(s.size() - len)) out.insert(y.prefix(len));
  }
  return out;
}

std::size_t longest_border_length(const Word& y) {
  const std::string_view s = y.view();
  for (std::size_t len = s.empty() ? 0 : s.size() - 1; len > 0; --len) {
    if (s.substr(0, len) == s.substr(s.size() - len)) return len;
  }
  return 0;
}

std::size_t period_of(const Word& y) {
  if (y.empty()) throw Error(ErrorCode::kEmptyInput, "period of the empty word");
  return y.size() - longest_border_length(y);
}

CoverResult is_cover(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "cover test with empty word");
  PositionSet starts = occurrences(u, y);
  if (starts.empty() || starts.front() != 1) return {};
  std::size_t covered = 0;  // y[1..covered] is covered so far
  for (std::size_t p : starts) {
    if (p > covered + 1) return {};
    covered = p + u.size() - 1;
  }
  if (covered != y.size()) return {};
  return {true, std::move(starts)};
}

std::size_t covered_prefix_extent(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "prefix extent of empty word");
  const PositionSet starts = occurrences(u, y);
  if (starts.empty() || starts.front() != 1) return 0;
  std::size_t covered = 0;
  for (std::size_t p : starts) {
    if (p > covered + 1) break;
    covered = p + u.size() - 1;
  }
  return covered;
}

std::size_t covered_suffix_extent(const Word& u, const Word& y) {
  if (u.empty()) throw Error(ErrorCode::kEmptyPattern, "suffix extent of empty word");
  const PositionSet starts = occurrences(u, y);
  const std::size_t n = y.size();
  const std::size_t m = u.size();
  if (starts.empty() || starts.back() + m - 1 != n) return 0;
  // Walk right to left; `from` is the leftmost covered position so far.
  std::size_t from = starts.back();
  for (auto it = starts.rbegin() + 1; it != starts.rend(); ++it) {
    if (*it + m < from) break;
    from = *it;
  }
  return n - from + 1;
}

Word superpose(const Word& u, const Word& v, std::size_t overlap) {
  if (overlap == 0 || overlap > std::min(u.size(), v.size())) {
    throw Error(ErrorCode::kOutOfRange,
                "overlap " + std::to_string(overlap) + " outside [1, " +
                    std::to_string(std::min(u.size(), v.size())) + "]");
  }
  if (u.suffix(overlap) != v.prefix(overlap)) {
    throw Error(ErrorCode::kOverlapMismatch,
                "suffix of \"" + u.str() + "\" and prefix of \"" + v.str() +
                    "\" disagree over " + std::to_string(overlap) + " letters");
  }
  return u.prefix(u.size() - overlap) + v;
}

}  // namespace fibquasi
