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

#ifndef FIBQUASI_WORD_HPP_
#define FIBQUASI_WORD_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fibquasi {

// The binary alphabet. The enumerator values are the ASCII letters so that a
// Word can be stored and printed as a plain string.
enum class Letter : char { a = 'a', b = 'b' };

// Ascending 1-based start positions.
using PositionSet = std::vector<std::size_t>;

// A finite word over {a, b}. Positions are 1-based in every public accessor
// (y[1..n]); the empty word is a valid value.
//
// Words order by length first and then lexicographically with a < b. This is
// the single canonical order used by WordSet and every serialized output.
class Word {
 public:
  Word() = default;

  // Throws Error(kInvalidAlphabet) if `text` contains anything but 'a'/'b'.
  explicit Word(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // 1-based letter access; throws Error(kOutOfRange).
  Letter at(std::size_t position) const;

  std::string_view view() const noexcept { return letters_; }
  const std::string& str() const noexcept { return letters_; }

  // y[first..last], 1-based and inclusive. An empty range (last == first - 1)
  // yields the empty word.
  Word slice(std::size_t first, std::size_t last) const;
  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  Word reversed() const;

  bool starts_with(const Word& w) const noexcept;
  bool ends_with(const Word& w) const noexcept;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept;

 private:
  struct Unchecked {};
  Word(Unchecked, std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

namespace literals {
inline Word operator""_w(const char* text, std::size_t length) {
  return Word(std::string_view(text, length));
}
}  // namespace literals

// A deduplicated set of words iterated in canonical (length, lexicographic)
// order.
class WordSet {
 public:
  using const_iterator = std::set<Word>::const_iterator;

  WordSet() = default;
  WordSet(std::initializer_list<Word> words) : members_(words) {}
  template <typename It>
  WordSet(It first, It last) : members_(first, last) {}

  bool insert(Word w) { return members_.insert(std::move(w)).second; }
  void merge(const WordSet& other) { members_.insert(other.begin(), other.end()); }
  bool contains(const Word& w) const { return members_.contains(w); }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  // Members of *this that are not in `other`.
  WordSet minus(const WordSet& other) const;
  // Every member reversed letter-wise.
  WordSet reversed_members() const;
  std::vector<std::string> strings() const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::set<Word> members_;
};

std::ostream& operator<<(std::ostream& os, const WordSet& set);

// --- primitive relations -------------------------------------------------

// True iff u occurs contiguously in y. The empty word is a factor of anything.
bool is_factor(const Word& u, const Word& y);

// Naive left-to-right scan; the ground truth every faster placement rule is
// checked against. Throws Error(kEmptyPattern) when u is empty.
PositionSet occurrences(const Word& u, const Word& y);

// Nonempty proper borders of y (neither the empty word nor y itself).
// Throws Error(kEmptyInput).
WordSet borders(const Word& y);

// Length of the longest nonempty proper border, 0 when there is none.
std::size_t longest_border_length(const Word& y);

// |y| - longest_border_length(y). Throws Error(kEmptyInput).
std::size_t period_of(const Word& y);

struct CoverResult {
  bool covers = false;
  // Every occurrence of u in y, present only when covers is true.
  std::optional<PositionSet> witness;

  explicit operator bool() const noexcept { return covers; }
};

// True iff the occurrences of u jointly cover every position of y. A word
// covers itself. Throws Error(kEmptyPattern) for empty u.
CoverResult is_cover(const Word& u, const Word& y);

// Largest L such that u covers y[1..L]; 0 if u is not a prefix of y.
std::size_t covered_prefix_extent(const Word& u, const Word& y);

// Largest L such that u covers y[n-L+1..n]; 0 if u is not a suffix of y.
std::size_t covered_suffix_extent(const Word& u, const Word& y);

// u[1..|u|-overlap] . v after checking that the last `overlap` letters of u
// equal the first `overlap` letters of v.
Word superpose(const Word& u, const Word& v, std::size_t overlap);

}  // namespace fibquasi

#endif  // FIBQUASI_WORD_HPP_
