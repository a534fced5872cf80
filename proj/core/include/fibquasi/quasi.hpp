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

#ifndef FIBQUASI_QUASI_HPP_
#define FIBQUASI_QUASI_HPP_

#include <cstddef>
#include <optional>

#include "fibquasi/word.hpp"

namespace fibquasi {

// Set enumerations that are quadratic in the number of candidate factors
// refuse inputs longer than this unless forced.
inline constexpr std::size_t kMaxOracleInput = 2000;
// seeds_of() re-checks every candidate against the exhaustive is_seed()
// oracle up to this input length.
inline constexpr std::size_t kSeedCrossCheckLength = 60;

struct EngineOptions {
  bool force = false;
};

// Every cover of y, y included. Tests each border of y plus y itself.
WordSet covers_of(const Word& y);

// Same set by descending the chain of longest proper covers: a factor no
// longer than a proper cover u covers y iff it covers u.
WordSet covers_by_chain(const Word& y);

// Prefixes z of y with covered_prefix_extent(z, y) >= period_of(y).
WordSet left_seeds_of(const Word& y);

// Prefixes z of y for which some right extension v with |v| < |z| makes z a
// cover of y.v. Only suffixes of z can end a covered word, so those are the
// extensions tried.
WordSet left_seeds_by_extension(const Word& y);

// Suffixes z of y with covered_suffix_extent(z, y) >= period_of(y).
WordSet right_seeds_of(const Word& y);

// Mirror of left_seeds_by_extension: suffixes z covering v.y, |v| < |z|.
WordSet right_seeds_by_extension(const Word& y);

// u covers left_ext . y . right_ext at `positions` (1-based, in the extended
// word). The first occurrence starts the extended word, so left_ext is a
// proper prefix of u; the last one ends it, so right_ext is a proper suffix.
struct SeedWitness {
  Word left_ext;
  Word right_ext;
  PositionSet positions;
};

struct SeedResult {
  bool is_seed = false;
  std::optional<SeedWitness> witness;

  explicit operator bool() const noexcept { return is_seed; }
};

// Exhaustive definition check: tries every (left_ext, right_ext) pair with
// |left_ext|, |right_ext| < |u|, shortest total extension first and the
// shorter left extension first on ties; the first success is the witness.
// Requires u to be a nonempty factor of y (Error(kEmptyPattern) /
// Error(kNotAFactor)).
SeedResult is_seed(const Word& u, const Word& y);

// Occurrence-gap criterion: consecutive occurrences of u in y are at most |u|
// apart, the head y[1..p_first-1] fits under an occurrence hanging off the
// left end, and the tail under one hanging off the right end.
bool is_seed_fast(const Word& u, const Word& y);

// Every distinct factor of y.
WordSet distinct_factors(const Word& y);

// Every distinct factor u of y with is_seed_fast(u, y). Inputs up to
// kSeedCrossCheckLength are also checked against is_seed(); a disagreement is
// a std::logic_error. Error(kSizeRefused) above kMaxOracleInput unless forced.
WordSet seeds_of(const Word& y, const EngineOptions& options = {});

enum class CircularUniverse {
  kLinearFactors,  // candidates are factors of y
  kCyclicFactors,  // candidates are factors of y.y no longer than y
};

// True iff the occurrences of u in y.y starting at 1..|y| hit every residue
// class mod |y|. Requires 1 <= |u| <= |y|.
bool is_circular_cover(const Word& u, const Word& y);

// Covers of y read as a cyclic word. Error(kSizeRefused) above
// kMaxOracleInput unless forced.
WordSet circular_covers_of(const Word& y,
                           CircularUniverse universe = CircularUniverse::kLinearFactors,
                           const EngineOptions& options = {});

}  // namespace fibquasi

#endif  // FIBQUASI_QUASI_HPP_
