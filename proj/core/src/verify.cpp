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

#include "fibquasi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <stdexcept>
#include <thread>

#include "fibquasi/error.hpp"
#include "fibquasi/fib.hpp"
#include "fibquasi/quasi.hpp"

namespace fibquasi {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r`");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r`");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> cells;
  line = trim(line);
  if (line.empty() || line.front() != '|') return cells;
  line.remove_prefix(1);
  while (!line.empty()) {
    const auto bar = line.find('|');
    cells.push_back(trim(line.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    line.remove_prefix(bar + 1);
  }
  return cells;
}

WordSet oracle_set(Category category, const Word& y) {
  switch (category) {
    case Category::kBorders: return borders(y);
    case Category::kCovers: return covers_of(y);
    case Category::kLeftSeeds: return left_seeds_of(y);
    case Category::kRightSeeds: return right_seeds_of(y);
    case Category::kSeeds: return seeds_of(y);
    case Category::kCircularCovers: return circular_covers_of(y);
  }
  throw std::logic_error("unhandled category");
}

bool is_documented(const std::vector<KnownDeviation>& documented, Category category,
                   unsigned n, Direction direction, const Word& w) {
  return std::find(documented.begin(), documented.end(),
                   KnownDeviation{category, n, direction, w}) != documented.end();
}

CellStatus classify(const QuasiReport& r, const std::vector<KnownDeviation>& documented) {
  if (r.passed()) return CellStatus::kPass;
  if (!r.error.empty()) return CellStatus::kFail;
  std::size_t listed = 0;
  for (const KnownDeviation& d : documented) {
    if (d.category == r.category && d.n == r.n) ++listed;
  }
  if (listed != r.missing.size() + r.extra.size()) return CellStatus::kFail;
  for (const Word& w : r.missing) {
    if (!is_documented(documented, r.category, r.n, Direction::kMissing, w)) {
      return CellStatus::kFail;
    }
  }
  for (const Word& w : r.extra) {
    if (!is_documented(documented, r.category, r.n, Direction::kExtra, w)) {
      return CellStatus::kFail;
    }
  }
  return CellStatus::kDocumented;
}

std::string describe(unsigned n, unsigned m) {
  return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

}  // namespace

std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::kMissing ? "missing" : "extra";
}

std::string_view to_string(CellStatus status) noexcept {
  switch (status) {
    case CellStatus::kPass: return "pass";
    case CellStatus::kFail: return "fail";
    case CellStatus::kDocumented: return "documented";
  }
  return "unknown";
}

std::vector<KnownDeviation> parse_deviation_table(std::string_view markdown) {
  std::vector<KnownDeviation> out;
  std::size_t line_no = 0;
  while (!markdown.empty()) {
    const auto eol = markdown.find('\n');
    const std::string_view line = markdown.substr(0, eol);
    markdown.remove_prefix(eol == std::string_view::npos ? markdown.size() : eol + 1);
    ++line_no;

    const auto cells = split_row(line);
    if (cells.empty()) continue;
    const auto category = parse_category(cells[0]);
    if (!category) continue;

    const auto bad = [&](const std::string& what) {
      return Error(ErrorCode::kConfig,
                   "deviation table line " + std::to_string(line_no) + ": " + what);
    };
    if (cells.size() < 4) throw bad("expected category | n | direction | word");
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(cells[1].data(), cells[1].data() + cells[1].size(), n);
    if (ec != std::errc{} || ptr != cells[1].data() + cells[1].size()) {
      throw bad("bad index '" + std::string(cells[1]) + "'");
    }
    Direction direction;
    if (cells[2] == "missing") {
      direction = Direction::kMissing;
    } else if (cells[2] == "extra") {
      direction = Direction::kExtra;
    } else {
      throw bad("direction must be 'missing' or 'extra'");
    }
    out.push_back({*category, n, direction, Word(cells[3])});
  }
  return out;
}

std::map<Category, unsigned> SuiteConfig::default_caps() {
  return {
      {Category::kBorders, 14},    {Category::kCovers, 14},
      {Category::kLeftSeeds, 14},  {Category::kRightSeeds, 14},
      {Category::kSeeds, 10},      {Category::kCircularCovers, 10},
  };
}

void validate(const SuiteConfig& config) {
  if (config.n_lo > config.n_hi) {
    throw Error(ErrorCode::kConfig, "empty index range " + std::to_string(config.n_lo) +
                                        ".." + std::to_string(config.n_hi));
  }
  if (config.categories.empty()) throw Error(ErrorCode::kConfig, "no categories selected");
  unsigned widest = 0;
  for (Category c : config.categories) {
    const auto it = config.oracle_caps.find(c);
    if (it == config.oracle_caps.end()) {
      throw Error(ErrorCode::kConfig, "no oracle cap for " + std::string(to_string(c)));
    }
    if (it->second > kDefaultMaxMaterialized) {
      throw Error(ErrorCode::kConfig, "cap for " + std::string(to_string(c)) +
                                          " exceeds N_max = " +
                                          std::to_string(kDefaultMaxMaterialized));
    }
    widest = std::max(widest, it->second);
  }
  if (config.n_hi > widest) {
    throw Error(ErrorCode::kConfig, "max index " + std::to_string(config.n_hi) +
                                        " exceeds every oracle cap (largest is " +
                                        std::to_string(widest) + ")");
  }
}

bool oracle_accepts(Category category, const Word& u, const Word& y) {
  if (u.empty() || u.size() > y.size()) return false;
  switch (category) {
    case Category::kBorders:
      return u.size() < y.size() && y.starts_with(u) && y.ends_with(u);
    case Category::kCovers:
      return bool(is_cover(u, y));
    case Category::kLeftSeeds:
      if (!y.starts_with(u)) return false;
      for (std::size_t ext = 0; ext < u.size(); ++ext) {
        if (is_cover(u, y + u.suffix(ext))) return true;
      }
      return false;
    case Category::kRightSeeds:
      if (!y.ends_with(u)) return false;
      for (std::size_t ext = 0; ext < u.size(); ++ext) {
        if (is_cover(u, u.prefix(ext) + y)) return true;
      }
      return false;
    case Category::kSeeds:
      return is_factor(u, y) && is_seed(u, y).is_seed;
    case Category::kCircularCovers:
      return is_factor(u, y) && is_circular_cover(u, y);
  }
  return false;
}

QuasiReport check_category(unsigned n, Category category, const SuiteConfig& config) {
  const auto cap = config.oracle_caps.find(category);
  if (cap == config.oracle_caps.end() || n > cap->second) {
    throw Error(ErrorCode::kCapExceeded,
                std::string(to_string(category)) + " oracle is capped at n = " +
                    (cap == config.oracle_caps.end() ? std::string("<none>")
                                                     : std::to_string(cap->second)) +
                    ", requested " + std::to_string(n));
  }
  const auto started = std::chrono::steady_clock::now();

  const EnumResult enumerated = enumerate(category, n);
  const Word y = fib_word(n).word;
  const WordSet oracle = oracle_set(category, y);

  QuasiReport r;
  r.n = n;
  r.category = category;
  r.enumerated_count = enumerated.materialized.size();
  r.oracle_count = oracle.size();
  r.missing = oracle.minus(enumerated.materialized);
  r.extra = enumerated.materialized.minus(oracle);

  for (const Word& w : r.missing) {
    if (!oracle_accepts(category, w, y)) {
      throw std::logic_error("missing word \"" + w.str() + "\" fails the " +
                             std::string(to_string(category)) + " predicate");
    }
    Attribution a{w, Direction::kMissing, {}};
    if (auto form = nearest_form(w)) a.forms.push_back(*form);
    r.attributions.push_back(std::move(a));
  }
  for (const Word& w : r.extra) {
    if (oracle_accepts(category, w, y)) {
      throw std::logic_error("extra word \"" + w.str() + "\" satisfies the " +
                             std::string(to_string(category)) + " predicate");
    }
    r.attributions.push_back({w, Direction::kExtra, enumerated.forms_for(w)});
  }
  r.status = classify(r, config.documented);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - started);
  return r;
}

BatteryReport cover_chain_battery(unsigned n_lo, unsigned n_hi) {
  BatteryReport r{"cover_of_cover", 0, {}, {}};
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const Word y = fib_word(n).word;
    const WordSet covers = covers_of(y);
    ++r.checked;
    if (covers != covers_by_chain(y)) r.failures.push_back("n=" + std::to_string(n) + " chain");
    const WordSet factors = distinct_factors(y);
    for (const Word& u : covers) {
      if (u == y) continue;
      for (const Word& z : factors) {
        if (z.size() > u.size()) break;
        ++r.checked;
        if (bool(is_cover(z, y)) != bool(is_cover(z, u))) {
          r.failures.push_back("n=" + std::to_string(n) + " u=" + u.str() + " z=" + z.str());
        }
      }
    }
  }
  return r;
}

BatteryReport expansion_determinism_battery(unsigned n_lo, unsigned n_hi) {
  BatteryReport r{"expansion_determinism", 0, {}, {}};
  for (unsigned n = std::max(n_lo, 2u); n <= n_hi; ++n) {
    const std::vector<Word> fib = fib_words_upto(n);
    for (unsigned m = 1; m < n; ++m) {
      ++r.checked;
      const Expansion left = expansion(n, m, RewriteOrder::kLeftmostFirst);
      const Expansion right = expansion(n, m, RewriteOrder::kRightmostFirst);
      Word tiled;
      bool small_run = false;
      bool adjacent_small = false;
      std::size_t next = 1;
      bool gap = false;
      for (const ExpansionItem& item : left.items) {
        gap = gap || item.start != next;
        const bool small = item.kind == FactorKind::kSmall;
        adjacent_small = adjacent_small || (small && small_run);
        small_run = small;
        tiled += small ? fib[m - 1] : fib[m];
        next = item.start + (small ? fib[m - 1] : fib[m]).size();
      }
      if (left != right) r.failures.push_back(describe(n, m) + " order-dependent");
      if (tiled != fib[n] || gap) r.failures.push_back(describe(n, m) + " does not tile F_n");
      if (adjacent_small) r.failures.push_back(describe(n, m) + " adjacent F_{m-1}");
    }
  }
  return r;
}

BatteryReport placement_sweep_battery(unsigned n_lo, unsigned n_hi) {
  BatteryReport r{"fib_occurrence_placement", 0, {}, {}};
  std::size_t trailing_small = 0;
  std::size_t trailing_small_not_border = 0;
  for (unsigned n = std::max(n_lo, 5u); n <= n_hi; ++n) {
    const std::vector<Word> fib = fib_words_upto(n);
    for (unsigned m = 3; m + 2 <= n; ++m) {
      ++r.checked;
      if (fib_occurrences(n, m) != occurrences(fib[m], fib[n])) {
        r.failures.push_back(describe(n, m));
      }
      const Expansion e = expansion(n, m);
      if (e.items.back().kind == FactorKind::kSmall) {
        ++trailing_small;
        if (!is_fib_border(n, m - 1)) ++trailing_small_not_border;
      }
    }
  }
  r.note = std::to_string(trailing_small) + " expansions end in F_{m-1}; " +
           std::to_string(trailing_small_not_border) + " of those F_{m-1} are not borders";
  return r;
}

BatteryReport invalid_left_seed_battery(unsigned n_lo, unsigned n_hi) {
  BatteryReport r{"invalid_left_seed", 0, {}, {}};
  for (unsigned n = std::max(n_lo, 5u); n <= n_hi; ++n) {
    const Word y = fib_word(n).word;
    const Word candidate = y.prefix(static_cast<std::size_t>(fib_len(n - 1)) - 1);
    ++r.checked;
    if (left_seeds_of(y).contains(candidate)) {
      r.failures.push_back("n=" + std::to_string(n) + " " + candidate.str());
    }
  }
  return r;
}

BatteryReport invalid_right_seed_battery(unsigned n_lo, unsigned n_hi) {
  BatteryReport r{"invalid_right_seed", 0, {}, {}};
  for (unsigned n = std::max(n_lo, 5u); n <= n_hi; ++n) {
    const std::vector<Word> fib = fib_words_upto(n);
    const WordSet right = right_seeds_of(fib[n]);
    for (std::size_t len = 1; len < fib[n - 3].size(); ++len) {
      const Word candidate = fib[n - 3].suffix(len) + fib[n - 4];
      ++r.checked;
      if (right.contains(candidate)) {
        r.failures.push_back("n=" + std::to_string(n) + " " + candidate.str());
      }
    }
  }
  return r;
}

SuiteResult run_suite(const SuiteConfig& config) {
  validate(config);

  struct Cell {
    unsigned n;
    Category category;
  };
  std::vector<Cell> cells;
  for (unsigned n = config.n_lo; n <= config.n_hi; ++n) {
    for (Category c : kAllCategories) {
      if (std::find(config.categories.begin(), config.categories.end(), c) ==
          config.categories.end()) {
        continue;
      }
      if (n <= config.oracle_caps.at(c)) cells.push_back({n, c});
    }
  }

  SuiteResult result;
  result.reports.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        result.reports[i] = check_category(cells[i].n, cells[i].category, config);
      } catch (const std::exception& e) {
        QuasiReport& r = result.reports[i];
        r.n = cells[i].n;
        r.category = cells[i].category;
        r.error = e.what();
        r.status = CellStatus::kFail;
      }
    }
  };
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  if (config.run_batteries) {
    const unsigned quadratic_hi = std::min(config.n_hi, 14u);
    result.batteries.push_back(cover_chain_battery(config.n_lo, quadratic_hi));
    result.batteries.push_back(expansion_determinism_battery(config.n_lo, config.n_hi));
    result.batteries.push_back(placement_sweep_battery(config.n_lo, config.n_hi));
    result.batteries.push_back(invalid_left_seed_battery(config.n_lo, quadratic_hi));
    result.batteries.push_back(invalid_right_seed_battery(config.n_lo, quadratic_hi));
  }

  SuiteSummary& s = result.summary;
  s.cells = result.reports.size();
  for (const QuasiReport& r : result.reports) {
    switch (r.status) {
      case CellStatus::kPass: ++s.passed; break;
      case CellStatus::kFail: ++s.failed; break;
      case CellStatus::kDocumented: ++s.documented; break;
    }
  }
  s.batteries = result.batteries.size();
  for (const BatteryReport& b : result.batteries) s.batteries_failed += b.passed() ? 0 : 1;
  return result;
}

}  // namespace fibquasi
