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

#include "fibquasi/closed_form.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "fibquasi/error.hpp"

namespace fibquasi {
namespace {

constexpr std::array<std::string_view, 6> kCategoryNames = {
    "borders", "covers", "left_seeds", "right_seeds", "seeds", "circular_covers",
};

void require_index(const std::span<const Word> fib, unsigned index) {
  if (index >= fib.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "form refers to F_" + std::to_string(index) + " beyond the table");
  }
}

// Accumulates one EnumResult, enforcing the letter budget as members are
// added so that oversized families fail before exhausting memory.
class FamilyBuilder {
 public:
  FamilyBuilder(Category category, unsigned n, const EnumLimits& limits)
      : limits_(limits), fib_(fib_words_upto(n, limits.fib)) {
    result_.n = n;
    result_.category = category;
  }

  std::size_t len(unsigned i) const { return fib_.at(i).size(); }

  void add(const FactorForm& form) {
    Word w = form.materialize(fib_);
    letters_ += w.size();
    if (letters_ > limits_.max_letters) {
      throw Error(ErrorCode::kBudgetExceeded,
                  std::string(to_string(result_.category)) + " of F_" +
                      std::to_string(result_.n) + " exceed the budget of " +
                      std::to_string(limits_.max_letters) + " letters");
    }
    if (fib_.back().size() <= limits_.factor_check_length && !is_factor(w, fib_.back())) {
      throw std::logic_error("family member \"" + w.str() + "\" is not a factor of F_" +
                             std::to_string(result_.n));
    }
    result_.forms.push_back(form);
    result_.materialized.insert(std::move(w));
  }

  void plain(unsigned m) { add({FormKind::kPlainFib, m, 0, 0}); }

  // F_m, F_{m-2}, ... down to and including `lowest`.
  void plain_descending(unsigned m, unsigned lowest) {
    for (unsigned k = m; k >= lowest && k <= m; k -= 2) plain(k);
  }

  // Number of forms added since `mark`, compared against an independently
  // counted family size.
  void expect_added(std::size_t mark, std::size_t expected, const char* family) const {
    if (result_.forms.size() - mark != expected) {
      throw std::logic_error(std::string("family ") + family + " at n = " +
                             std::to_string(result_.n) + " has " +
                             std::to_string(result_.forms.size() - mark) +
                             " members, expected " + std::to_string(expected));
    }
  }

  std::size_t mark() const { return result_.forms.size(); }
  EnumResult take() && { return std::move(result_); }

 private:
  const EnumLimits& limits_;
  std::vector<Word> fib_;
  EnumResult result_;
  std::uint64_t letters_ = 0;
};

// |{(a, b) : a_lo <= a <= a_hi, b_lo <= b <= b_hi, a + b >= sum}|, counted
// one b at a time.
std::size_t count_pairs(std::size_t a_lo, std::size_t a_hi, std::size_t b_lo,
                        std::size_t b_hi, std::size_t sum) {
  std::size_t count = 0;
  for (std::size_t b = b_lo; b <= b_hi && a_lo <= a_hi; ++b) {
    const std::size_t need = sum > b ? sum - b : 0;
    const std::size_t from = std::max(a_lo, need);
    if (from <= a_hi) count += a_hi - from + 1;
  }
  return count;
}

// F_m . y for every prefix y of F_{m-1} with |y| <= max_right.
void add_fib_plus_prefix(FamilyBuilder& b, unsigned m, std::size_t max_right) {
  for (std::size_t i = 0; i <= max_right; ++i) b.add({FormKind::kFibPlusPrefix, m, 0, i});
}

// Left seeds, n >= 4: {F_{n-1} x : x prefix of F_{n-2}} and, for each
// m in [3, n-2], {F_m x : x prefix of F_{m-1}[1..|F_{m-1}|-2]}.
void add_left_seed_families(FamilyBuilder& b, unsigned n) {
  if (n <= 2) {
    b.plain(n);
    return;
  }
  if (n == 3) {
    b.plain(2);
    b.plain(3);
    return;
  }
  add_fib_plus_prefix(b, n - 1, b.len(n - 2));
  for (unsigned m = 3; m + 2 <= n; ++m) add_fib_plus_prefix(b, m, b.len(m - 1) - 2);
}

void add_right_seed_families(FamilyBuilder& b, unsigned n) {
  if (n <= 2) {
    b.plain(n);
    return;
  }
  b.plain_descending(n, n % 2 == 1 ? 3 : 4);
  const unsigned m = n - 2;
  for (std::size_t i = 0; i <= b.len(m); ++i) b.add({FormKind::kSuffixPlusFib, m, i, 0});
}

// x F_m y: 0 < |x| < |F_m|, 0 < |y| < |F_{m-1}| - 1, |x| + |y| >= |F_{m-1}|.
void add_suffix_fib_prefix(FamilyBuilder& b, unsigned m) {
  const std::size_t fm = b.len(m);
  const std::size_t fm1 = b.len(m - 1);
  if (fm1 < 3) return;  // no admissible |y|
  const std::size_t mark = b.mark();
  for (std::size_t a = 1; a < fm; ++a) {
    for (std::size_t c = 1; c + 1 < fm1; ++c) {
      if (a + c >= fm1) b.add({FormKind::kSuffixFibPrefix, m, a, c});
    }
  }
  b.expect_added(mark, count_pairs(1, fm - 1, 1, fm1 - 2, fm1), "x.F_m.y");
}

// x F_{m-1} F_m y: 0 <= |x| <= |F_m|, 0 <= |y| <= |F_{m-1}|, |x| + |y| >= |F_m|.
void add_suffix_fib_fib_prefix(FamilyBuilder& b, unsigned m) {
  const std::size_t fm = b.len(m);
  const std::size_t fm1 = b.len(m - 1);
  const std::size_t mark = b.mark();
  for (std::size_t a = 0; a <= fm; ++a) {
    for (std::size_t c = 0; c <= fm1; ++c) {
      if (a + c >= fm) b.add({FormKind::kSuffixFibFibPrefix, m, a, c});
    }
  }
  b.expect_added(mark, count_pairs(0, fm, 0, fm1, fm), "x.F_{m-1}.F_m.y");
}

// x F_{n-2} y, y prefix of F_{n-5} F_{n-4}: 0 < |x| < |F_{n-2}|,
// 0 < |y| <= |F_{n-3}|, |x| + |y| >= |F_{n-3}|.
void add_suffix_fib_tail_prefix(FamilyBuilder& b, unsigned n) {
  const unsigned m = n - 2;
  const std::size_t fm = b.len(m);
  const std::size_t fm1 = b.len(m - 1);
  const std::size_t mark = b.mark();
  for (std::size_t a = 1; a < fm; ++a) {
    for (std::size_t c = 1; c <= fm1; ++c) {
      if (a + c >= fm1) b.add({FormKind::kSuffixFibTailPrefix, m, a, c});
    }
  }
  b.expect_added(mark, count_pairs(1, fm - 1, 1, fm1, fm1), "x.F_{n-2}.y");
}

}  // namespace

std::string_view to_string(Category category) noexcept {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<Category> parse_category(std::string_view name) noexcept {
  for (Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(FormKind kind) noexcept {
  switch (kind) {
    case FormKind::kPlainFib: return "PlainFib";
    case FormKind::kFibPlusPrefix: return "FibPlusPrefix";
    case FormKind::kSuffixPlusFib: return "SuffixPlusFib";
    case FormKind::kSuffixFibPrefix: return "SuffixFibPrefix";
    case FormKind::kSuffixFibFibPrefix: return "SuffixFibFibPrefix";
    case FormKind::kSuffixFibTailPrefix: return "SuffixFibTailPrefix";
    case FormKind::kWindow: return "Window";
  }
  return "Unknown";
}

Word FactorForm::materialize(std::span<const Word> fib) const {
  require_index(fib, base);
  const Word& fm = fib[base];
  if (kind != FormKind::kPlainFib && kind != FormKind::kWindow && base == 0) {
    throw Error(ErrorCode::kDomain, std::string(to_string(kind)) + " needs m >= 1");
  }
  switch (kind) {
    case FormKind::kPlainFib:
      return fm;
    case FormKind::kFibPlusPrefix:
      return fm + fib[base - 1].prefix(right_len);
    case FormKind::kSuffixPlusFib:
      return fm.suffix(left_len) + fib[base - 1] + fm;
    case FormKind::kSuffixFibPrefix:
      return fm.suffix(left_len) + fm + fib[base - 1].prefix(right_len);
    case FormKind::kSuffixFibFibPrefix:
      return fm.suffix(left_len) + fib[base - 1] + fm + fib[base - 1].prefix(right_len);
    case FormKind::kSuffixFibTailPrefix: {
      if (base < 3) throw Error(ErrorCode::kDomain, "tail-prefix form needs m >= 3");
      return fm.suffix(left_len) + fm + (fib[base - 3] + fib[base - 2]).prefix(right_len);
    }
    case FormKind::kWindow:
      return fm.slice(left_len + 1, left_len + right_len);
  }
  throw std::logic_error("unhandled form kind");
}

std::ostream& operator<<(std::ostream& os, const FactorForm& form) {
  return os << to_string(form.kind) << "(m=" << form.base << ", left_len=" << form.left_len
            << ", right_len=" << form.right_len << ")";
}

std::vector<FactorForm> EnumResult::forms_for(const Word& w) const {
  const std::vector<Word> fib = fib_words_upto(n, FibLimits{std::max(n, kDefaultMaxMaterialized)});
  std::vector<FactorForm> out;
  for (const FactorForm& f : forms) {
    if (f.materialize(fib) == w) out.push_back(f);
  }
  return out;
}

EnumResult enum_borders(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kBorders, n, limits);
  if (n >= 3) b.plain_descending(n - 2, n % 2 == 1 ? 1 : 2);
  return std::move(b).take();
}

EnumResult enum_covers(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kCovers, n, limits);
  if (n <= 4) {
    b.plain(n);
  } else {
    b.plain_descending(n, n % 2 == 1 ? 3 : 4);
  }
  return std::move(b).take();
}

EnumResult enum_left_seeds(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kLeftSeeds, n, limits);
  add_left_seed_families(b, n);
  return std::move(b).take();
}

EnumResult enum_right_seeds(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kRightSeeds, n, limits);
  add_right_seed_families(b, n);
  return std::move(b).take();
}

EnumResult enum_seeds(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kSeeds, n, limits);
  add_left_seed_families(b, n);
  add_right_seed_families(b, n);
  if (n == 4) b.add({FormKind::kWindow, 4, 1, 3});  // "baa" = F_4[2..4]
  if (n >= 5) {
    for (unsigned m = 3; m + 3 <= n; ++m) add_suffix_fib_prefix(b, m);
    for (unsigned m = 3; m + 3 <= n; ++m) add_suffix_fib_fib_prefix(b, m);
    add_suffix_fib_tail_prefix(b, n);
  }
  return std::move(b).take();
}

EnumResult enum_circular_covers(unsigned n, const EnumLimits& limits) {
  FamilyBuilder b(Category::kCircularCovers, n, limits);
  if (n <= 3) {
    b.plain(n);
  } else if (n == 4) {
    b.plain(4);
    b.plain(3);
  } else {
    b.plain(n);
    for (unsigned m = 3; m + 1 <= n; ++m) add_fib_plus_prefix(b, m, b.len(m - 1) - 2);
    for (unsigned m = 3; m + 2 <= n; ++m) add_suffix_fib_prefix(b, m);
    for (unsigned m = 3; m + 3 <= n; ++m) add_suffix_fib_fib_prefix(b, m);
  }
  return std::move(b).take();
}

EnumResult enumerate(Category category, unsigned n, const EnumLimits& limits) {
  switch (category) {
    case Category::kBorders: return enum_borders(n, limits);
    case Category::kCovers: return enum_covers(n, limits);
    case Category::kLeftSeeds: return enum_left_seeds(n, limits);
    case Category::kRightSeeds: return enum_right_seeds(n, limits);
    case Category::kSeeds: return enum_seeds(n, limits);
    case Category::kCircularCovers: return enum_circular_covers(n, limits);
  }
  throw std::logic_error("unhandled category");
}

std::optional<FactorForm> nearest_form(const Word& w) {
  if (w.empty()) return std::nullopt;
  // Fibonacci words no longer than w, F_0 first.
  std::vector<Word> fib{Word("b"), Word("a")};
  while (fib.back().size() + fib[fib.size() - 2].size() <= w.size()) {
    fib.push_back(fib.back() + fib[fib.size() - 2]);
  }
  for (unsigned m = static_cast<unsigned>(fib.size()); m-- > 0;) {
    const std::size_t pos = w.view().find(fib[m].view());
    if (pos == std::string_view::npos) continue;
    return FactorForm{FormKind::kSuffixFibPrefix, m, pos, w.size() - pos - fib[m].size()};
  }
  return std::nullopt;
}

}  // namespace fibquasi
