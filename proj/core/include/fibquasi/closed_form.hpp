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

#ifndef FIBQUASI_CLOSED_FORM_HPP_
#define FIBQUASI_CLOSED_FORM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fibquasi/fib.hpp"
#include "fibquasi/word.hpp"

namespace fibquasi {

enum class Category { kBorders, kCovers, kLeftSeeds, kRightSeeds, kSeeds, kCircularCovers };

inline constexpr Category kAllCategories[] = {
    Category::kBorders, Category::kCovers, Category::kLeftSeeds,
    Category::kRightSeeds, Category::kSeeds, Category::kCircularCovers,
};

std::string_view to_string(Category category) noexcept;
std::optional<Category> parse_category(std::string_view name) noexcept;

// Symbolic shape of one member of a closed-form family. With m = base,
// x = suffix of the stated word of length left_len and y = prefix of the
// stated word of length right_len:
//
//   kPlainFib            F_m
//   kFibPlusPrefix       F_m . y                 y prefix of F_{m-1}
//   kSuffixPlusFib       x . F_{m-1} . F_m       x suffix of F_m
//   kSuffixFibPrefix     x . F_m . y             x suffix of F_m, y prefix of F_{m-1}
//   kSuffixFibFibPrefix  x . F_{m-1} . F_m . y   x suffix of F_m, y prefix of F_{m-1}
//   kSuffixFibTailPrefix x . F_m . y             x suffix of F_m, y prefix of F_{m-3} F_{m-2}
//   kWindow              F_m[left_len + 1 .. left_len + right_len]
enum class FormKind {
  kPlainFib,
  kFibPlusPrefix,
  kSuffixPlusFib,
  kSuffixFibPrefix,
  kSuffixFibFibPrefix,
  kSuffixFibTailPrefix,
  kWindow,
};

std::string_view to_string(FormKind kind) noexcept;

struct FactorForm {
  FormKind kind = FormKind::kPlainFib;
  unsigned base = 0;
  std::size_t left_len = 0;
  std::size_t right_len = 0;

  // `fib` must hold F_0 .. F_k for every index the form refers to.
  Word materialize(std::span<const Word> fib) const;

  friend bool operator==(const FactorForm&, const FactorForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const FactorForm& form);

struct EnumLimits {
  FibLimits fib;
  // Upper bound on the summed length of the materialized family members.
  std::uint64_t max_letters = std::uint64_t{1} << 27;
  // Members are checked to be factors of F_n while |F_n| is at most this.
  std::uint64_t factor_check_length = 20000;
};

struct EnumResult {
  unsigned n = 0;
  Category category = Category::kBorders;
  std::vector<FactorForm> forms;
  WordSet materialized;

  // Forms whose materialization is `w`.
  std::vector<FactorForm> forms_for(const Word& w) const;
};

EnumResult enum_borders(unsigned n, const EnumLimits& limits = {});
EnumResult enum_covers(unsigned n, const EnumLimits& limits = {});
EnumResult enum_left_seeds(unsigned n, const EnumLimits& limits = {});
EnumResult enum_right_seeds(unsigned n, const EnumLimits& limits = {});
EnumResult enum_seeds(unsigned n, const EnumLimits& limits = {});
EnumResult enum_circular_covers(unsigned n, const EnumLimits& limits = {});

EnumResult enumerate(Category category, unsigned n, const EnumLimits& limits = {});

// Describes an arbitrary factor w as x . F_m . y around the leftmost
// occurrence of the longest Fibonacci word it contains, reported as a
// kSuffixFibPrefix form. Used to localize words that no family produced.
// Returns nullopt for the empty word.
std::optional<FactorForm> nearest_form(const Word& w);

}  // namespace fibquasi

#endif  // FIBQUASI_CLOSED_FORM_HPP_
