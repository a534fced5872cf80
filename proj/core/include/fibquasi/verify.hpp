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

#ifndef FIBQUASI_VERIFY_HPP_
#define FIBQUASI_VERIFY_HPP_

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fibquasi/closed_form.hpp"
#include "fibquasi/word.hpp"

namespace fibquasi {

enum class Direction { kMissing, kExtra };

std::string_view to_string(Direction direction) noexcept;

// One word on which a closed form and its oracle are known to disagree.
struct KnownDeviation {
  Category category = Category::kSeeds;
  unsigned n = 0;
  Direction direction = Direction::kMissing;
  Word word;

  friend bool operator==(const KnownDeviation&, const KnownDeviation&) = default;
};

// Reads deviation rows from a Markdown table whose first four cells are
// `category | n | direction | word`. Rows whose first cell is not a category
// name (headers, separators, prose) are skipped; a row that names a category
// but is otherwise malformed is an Error(kConfig).
std::vector<KnownDeviation> parse_deviation_table(std::string_view markdown);

// Why a word ended up in `missing` or `extra`: for extra words the forms that
// generated them, for missing words the nearest x.F_m.y shape.
struct Attribution {
  Word word;
  Direction direction = Direction::kMissing;
  std::vector<FactorForm> forms;
};

enum class CellStatus { kPass, kFail, kDocumented };

std::string_view to_string(CellStatus status) noexcept;

struct QuasiReport {
  unsigned n = 0;
  Category category = Category::kBorders;
  std::size_t enumerated_count = 0;
  std::size_t oracle_count = 0;
  WordSet missing;  // oracle - enumerated
  WordSet extra;    // enumerated - oracle
  std::vector<Attribution> attributions;
  CellStatus status = CellStatus::kPass;
  std::string error;  // set when the cell could not be evaluated
  std::chrono::microseconds elapsed{0};

  bool passed() const noexcept { return error.empty() && missing.empty() && extra.empty(); }
};

struct BatteryReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string note;

  bool passed() const noexcept { return failures.empty(); }
};

struct SuiteConfig {
  unsigned n_lo = 0;
  unsigned n_hi = 12;
  std::vector<Category> categories{std::begin(kAllCategories), std::end(kAllCategories)};
  std::map<Category, unsigned> oracle_caps = default_caps();
  bool run_batteries = true;
  // Mismatches listed here turn a failing cell into kDocumented.
  std::vector<KnownDeviation> documented;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  static std::map<Category, unsigned> default_caps();
};

struct SuiteSummary {
  std::size_t cells = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t documented = 0;
  std::size_t batteries = 0;
  std::size_t batteries_failed = 0;

  bool ok() const noexcept { return failed == 0 && batteries_failed == 0; }
};

struct SuiteResult {
  std::vector<QuasiReport> reports;
  std::vector<BatteryReport> batteries;
  SuiteSummary summary;
};

// Throws Error(kConfig) when the range is inverted, empty of categories, or
// n_hi exceeds every cap in play.
void validate(const SuiteConfig& config);

// Closed form vs oracle on F_n for one category. Error(kCapExceeded) above
// the category's cap. Every missing/extra word is re-checked individually
// against the category's membership predicate before the report is returned.
QuasiReport check_category(unsigned n, Category category, const SuiteConfig& config = {});

// Membership predicate behind each oracle set, evaluated one word at a time.
bool oracle_accepts(Category category, const Word& u, const Word& y);

// Property batteries; each takes the inclusive index range it sweeps.
BatteryReport cover_chain_battery(unsigned n_lo, unsigned n_hi);
BatteryReport expansion_determinism_battery(unsigned n_lo, unsigned n_hi);
BatteryReport placement_sweep_battery(unsigned n_lo, unsigned n_hi);
BatteryReport invalid_left_seed_battery(unsigned n_lo, unsigned n_hi);
BatteryReport invalid_right_seed_battery(unsigned n_lo, unsigned n_hi);

// Every (n, category) cell in range and under its cap, in (n, category)
// order, plus the batteries. Per-cell errors are collected into failing
// reports rather than thrown.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace fibquasi

#endif  // FIBQUASI_VERIFY_HPP_
