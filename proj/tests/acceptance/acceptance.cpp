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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "fibquasi/closed_form.hpp"
#include "fibquasi/fib.hpp"
#include "fibquasi/quasi.hpp"
#include "fibquasi/verify.hpp"
#include "fibquasi/word.hpp"

using namespace fibquasi;

namespace {

struct Outcome {
  bool pass = true;
  bool documented = false;
  std::vector<std::string> notes;

  void fail(std::string why) {
    pass = false;
    notes.push_back(std::move(why));
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string str(const WordSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

WordSet brute_set(const std::set<std::string>& s) {
  WordSet out;
  for (const std::string& w : s) out.insert(Word(w));
  return out;
}

Word fib(unsigned n) { return fib_word(n).word; }

// Mismatches of one category against the deviation note. Each actual
// mismatch must have a row naming the same category, n, direction and word
// and the clause that the suite attributes it to; and no row may be stale.
void compare_with_note(Outcome& o, Category cat, unsigned n_hi) {
  const std::string note = read_file(FIBQUASI_DEVIATIONS_PATH);
  std::vector<KnownDeviation> rows;
  try {
    for (const KnownDeviation& d : parse_deviation_table(note)) {
      if (d.category == cat) rows.push_back(d);
    }
  } catch (const std::exception& e) {
    o.fail(std::string("deviation note unreadable: ") + e.what());
    return;
  }
  std::size_t seen = 0;
  for (unsigned n = 0; n <= n_hi; ++n) {
    const QuasiReport r = check_category(n, cat);
    for (const Attribution& a : r.attributions) {
      std::ostringstream line;
      line << "n=" << n << ' ' << to_string(a.direction) << ' ' << a.word;
      for (const FactorForm& f : a.forms) line << " <- " << f;
      std::cout << "    " << line.str() << '\n';
      const KnownDeviation key{cat, n, a.direction, a.word};
      bool listed = false;
      for (const KnownDeviation& d : rows) listed = listed || d == key;
      if (!listed) {
        o.fail("undocumented: " + line.str());
        continue;
      }
      ++seen;
      // the row must also carry the clause
      std::ostringstream form;
      if (!a.forms.empty()) form << a.forms.front();
      bool clause = false;
      std::istringstream lines(note);
      for (std::string l; std::getline(lines, l);) {
        if (l.find(std::string("| ") + std::string(to_string(cat)) + " | " +
                   std::to_string(n) + " |") == 0 &&
            l.find(a.word.str()) != std::string::npos && l.find(form.str()) != std::string::npos) {
          clause = true;
        }
      }
      o.check(clause, "note row lacks the clause for " + line.str());
    }
  }
  o.check(seen == rows.size(), "note lists " + std::to_string(rows.size()) +
                                   " rows but " + std::to_string(seen) + " mismatches occurred");
  if (o.pass && seen > 0) o.documented = true;
}

Outcome criterion_covers() {
  Outcome o;
  for (unsigned n = 0; n <= 14; ++n) {
    const Word y = fib(n);
    const WordSet e = enum_covers(n).materialized;
    o.check(e == covers_of(y), "n=" + std::to_string(n) + " enum " + str(e));
    std::set<std::string> b{y.str()};
    for (const std::string& w : brute::borders(y.str())) {
      if (brute::covers(w, y.str())) b.insert(w);
    }
    o.check(e == brute_set(b), "n=" + std::to_string(n) + " brute");
  }
  return o;
}

Outcome criterion_borders() {
  Outcome o;
  for (unsigned n = 0; n <= 14; ++n) {
    const Word y = fib(n);
    const WordSet e = enum_borders(n).materialized;
    o.check(e == borders(y), "n=" + std::to_string(n));
    o.check(e == brute_set(brute::borders(y.str())), "n=" + std::to_string(n) + " brute");
  }
  return o;
}

Outcome criterion_left_seeds() {
  Outcome o;
  for (unsigned n = 0; n <= 14; ++n) {
    const Word y = fib(n);
    const WordSet e = enum_left_seeds(n).materialized;
    o.check(e == left_seeds_of(y), "n=" + std::to_string(n));
    o.check(e == left_seeds_by_extension(y), "n=" + std::to_string(n) + " extension");
  }
  o.check(enum_left_seeds(6).materialized.size() == 9, "count at n=6");
  return o;
}

Outcome criterion_right_seeds() {
  Outcome o;
  for (unsigned n = 0; n <= 14; ++n) {
    const Word y = fib(n);
    const WordSet e = enum_right_seeds(n).materialized;
    o.check(e == right_seeds_of(y), "n=" + std::to_string(n));
    o.check(e == right_seeds_by_extension(y), "n=" + std::to_string(n) + " extension");
  }
  return o;
}

Outcome criterion_seeds() {
  Outcome o;
  const Word baa("baa");
  o.check(enum_seeds(4).materialized.contains(baa), "baa not enumerated at n=4");
  o.check(seeds_of(fib(4)).contains(baa), "baa not a seed of F_4");
  for (unsigned n = 0; n <= 10; ++n) {
    const Word y = fib(n);
    // every oracle member re-checked through the witness search
    for (const Word& u : seeds_of(y)) {
      o.check(is_seed(u, y).is_seed, "n=" + std::to_string(n) + " " + u.str());
    }
  }
  compare_with_note(o, Category::kSeeds, 10);
  return o;
}

Outcome criterion_circular() {
  Outcome o;
  o.check(enum_circular_covers(4).materialized == WordSet{Word("aba"), Word("abaab")},
          "enum at n=4");
  o.check(circular_covers_of(fib(4)) == WordSet{Word("aba"), Word("abaab")}, "oracle at n=4");
  for (unsigned n = 0; n <= 10; ++n) {
    const std::string y = brute::fibonacci(n);
    std::set<std::string> want;
    for (const std::string& f : brute::factors(y)) {
      if (brute::circular_cover(f, y)) want.insert(f);
    }
    o.check(circular_covers_of(Word(y)) == brute_set(want), "n=" + std::to_string(n) + " brute");
  }
  compare_with_note(o, Category::kCircularCovers, 10);
  return o;
}

Outcome criterion_placement() {
  Outcome o;
  for (unsigned n = 5; n <= 18; ++n) {
    const std::string y = brute::fibonacci(n);
    for (unsigned m = 3; m + 2 <= n; ++m) {
      o.check(fib_occurrences(n, m) == brute::occurrences(brute::fibonacci(m), y),
              "n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  o.check(occurrences(Word("ab"), fib(5)) == PositionSet{1, 4, 6}, "m=2 naive");
  o.check(expansion_rule_positions(5, 2) == PositionSet{1, 3, 4, 6}, "m=2 rule");
  return o;
}

Outcome criterion_negative() {
  Outcome o;
  for (const BatteryReport& b :
       {invalid_left_seed_battery(5, 14), invalid_right_seed_battery(5, 14)}) {
    o.check(b.passed() && b.checked > 0, b.name);
    for (const std::string& f : b.failures) o.fail(b.name + ": " + f);
  }
  // same candidates through the extension oracle
  for (unsigned n = 5; n <= 14; ++n) {
    const std::vector<Word> f = fib_words_upto(n);
    const Word left = f[n].prefix(f[n - 1].size() - 1);
    o.check(!oracle_accepts(Category::kLeftSeeds, left, f[n]), "left n=" + std::to_string(n));
    for (std::size_t len = 1; len < f[n - 3].size(); ++len) {
      const Word right = f[n - 3].suffix(len) + f[n - 4];
      o.check(!oracle_accepts(Category::kRightSeeds, right, f[n]),
              "right n=" + std::to_string(n) + " " + right.str());
    }
  }
  return o;
}

void seed_agreement(Outcome& o, const Word& y) {
  for (const Word& u : distinct_factors(y)) {
    if (is_seed(u, y).is_seed != is_seed_fast(u, y)) o.fail("is_seed " + u.str() + " in " + y.str());
  }
  if (left_seeds_of(y).reversed_members() != right_seeds_of(y.reversed())) {
    o.fail("mirror " + y.str());
  }
  if (right_seeds_of(y).reversed_members() != left_seeds_of(y.reversed())) {
    o.fail("mirror " + y.str());
  }
}

Outcome criterion_self_consistency() {
  Outcome o;
  for (unsigned n = 0; n <= 9; ++n) seed_agreement(o, fib(n));
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 10000; ++i) seed_agreement(o, Word(brute::random_word(rng, 1, 40)));
  std::size_t words = 0;
  for (std::size_t len = 1; len <= 14; ++len) {
    for (const std::string& s : brute::all_words(len)) {
      ++words;
      const Word y(s);
      const WordSet covers = covers_of(y);
      if (covers != covers_by_chain(y)) o.fail("chain " + s);
      for (const Word& u : covers) {
        // a cover of a cover is a cover
        for (const Word& z : covers_of(u)) {
          if (!covers.contains(z)) o.fail("transitivity " + s + " " + u.str() + " " + z.str());
        }
      }
    }
  }
  o.check(words == (std::size_t{1} << 15) - 2, "corpus size");
  return o;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + FIBQUASI_CLI_PATH + "\" " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

std::string strip_timing(const std::string& s) {
  std::string out;
  std::size_t pos = 0;
  const std::string key = "\"elapsed_us\":";
  while (true) {
    const auto at = s.find(key, pos);
    out += s.substr(pos, at == std::string::npos ? std::string::npos : at - pos);
    if (at == std::string::npos) break;
    pos = s.find_first_not_of("0123456789", at + key.size());
  }
  return out;
}

Outcome criterion_determinism() {
  Outcome o;
  int first_status = 0, second_status = 0;
  const std::string first = run_cli("verify --max-n 12 --json", first_status);
  const std::string second = run_cli("verify --max-n 12 --json", second_status);
  o.check(!first.empty(), "no output");
  o.check(first_status == second_status, "exit status differs");
  o.check(first.find("\"type\":\"summary\"") != std::string::npos, "no summary");
  o.check(strip_timing(first) == strip_timing(second), "reports differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "covers closed form, n <= 14", 10, criterion_covers},
      {2, "borders closed form, n <= 14", 5, criterion_borders},
      {3, "left seeds closed form, n <= 14; 9 at n = 6", 30, criterion_left_seeds},
      {4, "right seeds closed form, n <= 14", 30, criterion_right_seeds},
      {5, "seeds closed form, n <= 10; baa at n = 4", 180, criterion_seeds},
      {6, "circular covers closed form, n <= 10; {aba, abaab} at n = 4", 120,
       criterion_circular},
      {7, "occurrence placement, n <= 18; m = 2 counterexample", 60, criterion_placement},
      {8, "invalid left/right seed candidates, 5 <= n <= 14", 60, criterion_negative},
      {9, "oracle self-consistency", 600, criterion_self_consistency},
      {10, "verify --max-n 12 --json is deterministic", 300, criterion_determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    std::printf("criterion %2d %s%s: %s (%.2f s)\n", c.id,
                o.pass ? "PASS" : "FAIL", o.documented ? " (documented deviation)" : "", c.name,
                secs);
    for (std::size_t i = 0; i < o.notes.size() && i < 20; ++i) {
      std::printf("    %s\n", o.notes[i].c_str());
    }
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
