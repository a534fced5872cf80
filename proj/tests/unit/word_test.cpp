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

#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "fibquasi/error.hpp"
#include "fibquasi/word.hpp"

using namespace fibquasi;
using namespace fibquasi::literals;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected fibquasi::Error");
  return ErrorCode::kConfig;
}

}  // namespace

TEST_SUITE("word") {

TEST_CASE("words reject letters outside {a, b}") {
  CHECK(code_of([] { Word("abcab"); }) == ErrorCode::kInvalidAlphabet);
  CHECK(Word("").empty());
  CHECK("ab"_w.at(2) == Letter::b);
  CHECK(code_of([] { "ab"_w.at(0); }) == ErrorCode::kOutOfRange);
  CHECK(code_of([] { "ab"_w.at(3); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("canonical order is length first, then a < b") {
  WordSet s{"b"_w, "aa"_w, "a"_w, "ab"_w, ""_w, "ba"_w, "a"_w};
  CHECK(s.strings() == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba"});
  CHECK("b"_w < "aa"_w);
  CHECK("abaab"_w.slice(2, 4) == "baa"_w);
  CHECK("abaab"_w.slice(3, 2).empty());
}

TEST_CASE("is_factor") {
  CHECK(is_factor("aba"_w, "abaab"_w));
  CHECK_FALSE(is_factor("bb"_w, "abaab"_w));
  CHECK(is_factor(""_w, "ab"_w));
}

TEST_CASE("occurrences scans every start") {
  CHECK(occurrences("ab"_w, "abaababa"_w) == PositionSet{1, 4, 6});
  CHECK(occurrences("aba"_w, "abaababaabaab"_w) == PositionSet{1, 4, 6, 9});
  CHECK(occurrences("abaab"_w, "abaab"_w) == PositionSet{1});
  CHECK(occurrences("abaabab"_w, "aba"_w).empty());
  CHECK(code_of([] { occurrences(""_w, "ab"_w); }) == ErrorCode::kEmptyPattern);
}

TEST_CASE("borders exclude the empty word and the word itself") {
  CHECK(borders("abaababa"_w) == WordSet{"a"_w, "aba"_w});
  CHECK(borders("a"_w).empty());
  CHECK(borders("aabaa"_w) == WordSet{"a"_w, "aa"_w});
  CHECK(code_of([] { borders(Word()); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("period_of") {
  CHECK(period_of("abaababa"_w) == 5);
  CHECK(period_of("aaa"_w) == 1);
  CHECK(period_of("ab"_w) == 2);
  CHECK(code_of([] { period_of(Word()); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("is_cover returns the occurrence witness") {
  const CoverResult r = is_cover("abaab"_w, "abaababaabaab"_w);
  REQUIRE(r.covers);
  CHECK(*r.witness == PositionSet{1, 6, 9});
  CHECK_FALSE(is_cover("aba"_w, "abaababaabaab"_w));
  CHECK(is_cover("abaababaabaab"_w, "abaababaabaab"_w));
  CHECK_FALSE(is_cover("bb"_w, "abaab"_w).witness.has_value());
  CHECK(code_of([] { is_cover(""_w, "ab"_w); }) == ErrorCode::kEmptyPattern);
}

TEST_CASE("covered prefix and suffix extents") {
  const Word f6("abaababaabaab");
  CHECK(covered_prefix_extent("aba"_w, f6) == 11);
  CHECK(covered_prefix_extent("b"_w, "abaab"_w) == 0);
  CHECK(covered_prefix_extent("abaab"_w, f6) == 13);
  CHECK(covered_suffix_extent("abaab"_w, f6) == 13);
  CHECK(covered_suffix_extent("ab"_w, "aba"_w) == 0);
  CHECK(covered_suffix_extent("aab"_w, "abaab"_w) == 3);
}

TEST_CASE("superpose") {
  CHECK(superpose("aba"_w, "aab"_w, 1) == "abaab"_w);
  CHECK(superpose("ab"_w, "ba"_w, 1) == "aba"_w);
  CHECK(superpose("aba"_w, "bab"_w, 2) == "abab"_w);
  CHECK(code_of([] { superpose("ab"_w, "ab"_w, 1); }) == ErrorCode::kOverlapMismatch);
  CHECK(code_of([] { superpose("ab"_w, "ba"_w, 0); }) == ErrorCode::kOutOfRange);
  CHECK(code_of([] { superpose("ab"_w, "bab"_w, 3); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("primitive relations agree with the reference definitions on random words") {
  std::mt19937_64 rng(20261019);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::string ys = brute::random_word(rng, 1, 24);
    const Word y(ys);

    const WordSet b = borders(y);
    const std::vector<std::string> listed = b.strings();
    const std::set<std::string> got(listed.begin(), listed.end());
    CHECK(got == brute::borders(ys));
    for (const Word& u : b) CHECK((y.starts_with(u) && y.ends_with(u) && u.size() < y.size()));

    // Both characterizations of the period.
    CHECK(period_of(y) == brute::shift_period(ys));
    CHECK(period_of(y) + longest_border_length(y) == y.size());

    const std::string us = brute::random_word(rng, 1, 5);
    const Word u(us);
    CHECK(occurrences(u, y) == brute::occurrences(us, ys));
    const bool covers = is_cover(u, y).covers;
    CHECK(covers == brute::covers(us, ys));
    if (covers) CHECK((u == y || b.contains(u)));
    CHECK((covered_prefix_extent(u, y) == y.size()) == covers);
    CHECK(covered_suffix_extent(u, y) == covered_prefix_extent(u.reversed(), y.reversed()));

    // A prefix of y as pattern exercises the chaining paths.
    const Word p = y.prefix(1 + iter % y.size());
    CHECK(covered_suffix_extent(p, y) == covered_prefix_extent(p.reversed(), y.reversed()));
    CHECK((covered_prefix_extent(p, y) == y.size()) == is_cover(p, y).covers);

    const std::size_t overlap = 1 + iter % u.size();
    if (overlap <= y.size()) {
      const Word v = u.suffix(overlap) + y;
      const Word s = superpose(u, v, overlap);
      CHECK(s.starts_with(u));
      CHECK(s.ends_with(v));
      CHECK(s.size() == u.size() + v.size() - overlap);
    }
  }
}

}  // TEST_SUITE
