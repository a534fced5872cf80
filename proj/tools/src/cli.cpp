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

#include "fibquasi_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibquasi/closed_form.hpp"
#include "fibquasi/error.hpp"
#include "fibquasi/fib.hpp"
#include "fibquasi/quasi.hpp"
#include "fibquasi/serialize.hpp"
#include "fibquasi/verify.hpp"
#include "fibquasi/word.hpp"

namespace fibquasi::cli {
namespace {

struct Globals {
  bool json = false;
  bool force = false;
};

struct GenArgs {
  long long n = 0;
  bool len = false;
};

struct AnalyzeArgs {
  std::string word;
  std::string file;
  bool borders = false;
  bool period = false;
  bool covers = false;
  bool left_seeds = false;
  bool right_seeds = false;
  bool seeds = false;
  bool circular = false;
  bool unrestricted = false;
};

struct EnumArgs {
  long long n = 0;
  bool borders = false;
  bool covers = false;
  bool left_seeds = false;
  bool right_seeds = false;
  bool seeds = false;
  bool circular = false;
};

struct OccurrencesArgs {
  long long n = 0;
  long long m = 0;
  bool naive = false;
};

struct VerifyArgs {
  long long min_n = 0;
  long long max_n = 12;
  std::vector<std::string> only;
  std::string deviations;
  std::string out;
  unsigned threads = 0;
  bool no_batteries = false;
};

unsigned index_arg(long long value, const char* what) {
  if (value < 0 || value > 1'000'000) {
    throw Error(ErrorCode::kDomain, std::string(what) + " must be a non-negative index, got " +
                                        std::to_string(value));
  }
  return static_cast<unsigned>(value);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kConfig, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void print_set(std::ostream& out, std::string_view label, const WordSet& set) {
  out << label << " (" << set.size() << "):";
  for (const Word& w : set) out << ' ' << w;
  out << '\n';
}

int cmd_gen(const Globals& g, const GenArgs& a, std::ostream& out) {
  const unsigned n = index_arg(a.n, "N");
  if (a.len) {
    const std::uint64_t len = fib_len(n);
    if (g.json) {
      out << Json{{"n", n}, {"length", len}}.dump() << '\n';
    } else {
      out << len << '\n';
    }
    return kExitOk;
  }
  const FibWord f = fib_word(n, FibLimits::from_env());
  if (g.json) {
    out << Json{{"n", n}, {"word", f.word}}.dump() << '\n';
  } else {
    out << f.word << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const Globals& g, AnalyzeArgs a, std::ostream& out) {
  std::string text = a.file.empty() ? a.word : read_file(a.file);
  std::erase_if(text, [](unsigned char c) { return std::isspace(c) != 0; });
  if (text.size() > kMaxInputLetters && !g.force) {
    throw Error(ErrorCode::kSizeRefused, "input has " + std::to_string(text.size()) +
                                             " letters, more than " +
                                             std::to_string(kMaxInputLetters) +
                                             "; pass --force to analyze it anyway");
  }
  const Word y(text);
  if (y.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to analyze");

  if (!(a.borders || a.period || a.covers || a.left_seeds || a.right_seeds || a.seeds ||
        a.circular)) {
    a.borders = a.period = a.covers = a.left_seeds = a.right_seeds = a.seeds = a.circular =
        true;
  }
  const EngineOptions options{g.force};
  const auto universe =
      a.unrestricted ? CircularUniverse::kCyclicFactors : CircularUniverse::kLinearFactors;

  Json doc{{"word", y}, {"length", y.size()}};
  if (a.borders) doc["borders"] = borders(y);
  if (a.period) doc["period"] = period_of(y);
  if (a.covers) doc["covers"] = covers_of(y);
  if (a.left_seeds) doc["left_seeds"] = left_seeds_of(y);
  if (a.right_seeds) doc["right_seeds"] = right_seeds_of(y);
  if (a.seeds) doc["seeds"] = seeds_of(y, options);
  if (a.circular) doc["circular_covers"] = circular_covers_of(y, universe, options);

  if (g.json) {
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "word" || key == "length") continue;
    if (value.is_number()) {
      out << key << ": " << value.dump() << '\n';
    } else {
      print_set(out, key, value.get<WordSet>());
    }
  }
  return kExitOk;
}

int cmd_enum(const Globals& g, const EnumArgs& a, std::ostream& out) {
  const unsigned n = index_arg(a.n, "N");
  std::vector<Category> chosen;
  if (a.borders) chosen.push_back(Category::kBorders);
  if (a.covers) chosen.push_back(Category::kCovers);
  if (a.left_seeds) chosen.push_back(Category::kLeftSeeds);
  if (a.right_seeds) chosen.push_back(Category::kRightSeeds);
  if (a.seeds) chosen.push_back(Category::kSeeds);
  if (a.circular) chosen.push_back(Category::kCircularCovers);
  if (chosen.size() != 1) {
    throw Error(ErrorCode::kConfig, "enum needs exactly one of --borders, --covers, "
                                    "--left-seeds, --right-seeds, --seeds, --circular");
  }
  EnumLimits limits;
  limits.fib = FibLimits::from_env();
  const EnumResult r = enumerate(chosen.front(), n, limits);
  if (g.json) {
    out << Json(r).dump() << '\n';
    return kExitOk;
  }
  out << to_string(r.category) << " of F_" << n << ": " << r.forms.size() << " forms, "
      << r.materialized.size() << " words\n";
  for (const FactorForm& f : r.forms) out << "  " << f << '\n';
  for (const Word& w : r.materialized) out << w << '\n';
  return kExitOk;
}

int cmd_occurrences(const Globals& g, const OccurrencesArgs& a, std::ostream& out) {
  const unsigned n = index_arg(a.n, "N");
  const unsigned m = index_arg(a.m, "M");
  const FibLimits limits = FibLimits::from_env();
  // The placement rule only holds for 3 <= m <= n - 2; elsewhere scan.
  const bool placement = !a.naive && m >= 3 && m + 2 <= n;
  const PositionSet positions =
      placement ? fib_occurrences(n, m, limits)
                : occurrences(fib_word(m, limits).word, fib_word(n, limits).word);
  if (g.json) {
    out << Json{{"n", n},
                {"m", m},
                {"method", placement ? "placement" : "scan"},
                {"positions", positions}}
               .dump()
        << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < positions.size(); ++i) out << (i ? " " : "") << positions[i];
  out << '\n';
  return kExitOk;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  SuiteConfig config;
  config.n_lo = index_arg(a.min_n, "--min-n");
  config.n_hi = index_arg(a.max_n, "--max-n");
  config.threads = a.threads;
  config.run_batteries = !a.no_batteries;
  if (!a.only.empty()) {
    config.categories.clear();
    for (const std::string& name : a.only) {
      const auto c = parse_category(name);
      if (!c) throw Error(ErrorCode::kConfig, "unknown category '" + name + "'");
      if (std::find(config.categories.begin(), config.categories.end(), *c) ==
          config.categories.end()) {
        config.categories.push_back(*c);
      }
    }
  }
  if (!a.deviations.empty()) config.documented = parse_deviation_table(read_file(a.deviations));
  validate(config);

  const SuiteResult result = run_suite(config);
  if (!a.out.empty()) {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kConfig, "cannot write '" + a.out + "'");
    file << to_json_lines(result);
  }

  if (g.json) {
    out << Json(result).dump() << '\n';
  } else {
    for (const QuasiReport& r : result.reports) {
      out << "n=" << r.n << ' ' << to_string(r.category) << ' ' << to_string(r.status)
          << " enumerated=" << r.enumerated_count << " oracle=" << r.oracle_count;
      if (!r.error.empty()) out << " error: " << r.error;
      out << '\n';
      for (const Attribution& at : r.attributions) {
        out << "    " << to_string(at.direction) << ' ' << at.word;
        for (const FactorForm& f : at.forms) out << "  " << f;
        out << '\n';
      }
    }
    for (const BatteryReport& b : result.batteries) {
      out << "battery " << b.name << ' ' << (b.passed() ? "pass" : "fail")
          << " checked=" << b.checked;
      if (!b.note.empty()) out << " (" << b.note << ')';
      out << '\n';
      for (const std::string& f : b.failures) out << "    " << f << '\n';
    }
    const SuiteSummary& s = result.summary;
    out << "cells=" << s.cells << " passed=" << s.passed << " failed=" << s.failed
        << " documented=" << s.documented << " batteries_failed=" << s.batteries_failed
        << '\n';
  }
  return result.summary.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covers, seeds and Fibonacci-word closed forms", "fibquasi"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit a single JSON document");
  app.add_flag("--force", g.force, "Lift input size refusals");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print the Fibonacci word F_N");
  gen_cmd->add_option("N", gen.n, "Index")->required();
  gen_cmd->add_flag("--len", gen.len, "Print |F_N| instead (N <= 90)");

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "Quasiperiodicity of an arbitrary word");
  auto* word_opt = an_cmd->add_option("WORD", an.word, "Word over {a, b}");
  auto* file_opt = an_cmd->add_option("--file", an.file, "Read the word from a file");
  word_opt->excludes(file_opt);
  an_cmd->add_flag("--borders", an.borders);
  an_cmd->add_flag("--period", an.period);
  an_cmd->add_flag("--covers", an.covers);
  an_cmd->add_flag("--left-seeds", an.left_seeds);
  an_cmd->add_flag("--right-seeds", an.right_seeds);
  an_cmd->add_flag("--seeds", an.seeds);
  an_cmd->add_flag("--circular", an.circular);
  an_cmd->add_flag("--unrestricted", an.unrestricted,
                   "Circular candidates from the cyclic word, not only linear factors");

  EnumArgs en;
  auto* en_cmd = app.add_subcommand("enum", "Closed-form family for F_N");
  en_cmd->add_option("N", en.n, "Index")->required();
  en_cmd->add_flag("--borders", en.borders);
  en_cmd->add_flag("--covers", en.covers);
  en_cmd->add_flag("--left-seeds", en.left_seeds);
  en_cmd->add_flag("--right-seeds", en.right_seeds);
  en_cmd->add_flag("--seeds", en.seeds);
  en_cmd->add_flag("--circular", en.circular);

  OccurrencesArgs oc;
  auto* oc_cmd = app.add_subcommand("occurrences", "Start positions of F_M in F_N");
  oc_cmd->add_option("N", oc.n, "Index of the text")->required();
  oc_cmd->add_option("M", oc.m, "Index of the pattern")->required();
  oc_cmd->add_flag("--naive", oc.naive, "Scan instead of using the placement rule");

  VerifyArgs ve;
  auto* ve_cmd = app.add_subcommand("verify", "Compare closed forms against the oracles");
  ve_cmd->add_option("--min-n", ve.min_n, "Smallest index")->capture_default_str();
  ve_cmd->add_option("--max-n", ve.max_n, "Largest index")->capture_default_str();
  ve_cmd->add_option("--only", ve.only, "Restrict to these categories");
  ve_cmd->add_option("--deviations", ve.deviations, "Markdown table of known mismatches");
  ve_cmd->add_option("--out", ve.out, "Write the JSON-lines report here");
  ve_cmd->add_option("--threads", ve.threads, "Worker threads, 0 = all cores");
  ve_cmd->add_flag("--no-batteries", ve.no_batteries, "Skip the property batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "fibquasi: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(g, gen, out);
    if (*an_cmd) {
      if (an.word.empty() && an.file.empty()) {
        throw Error(ErrorCode::kEmptyInput, "analyze needs WORD or --file");
      }
      return cmd_analyze(g, an, out);
    }
    if (*en_cmd) return cmd_enum(g, en, out);
    if (*oc_cmd) return cmd_occurrences(g, oc, out);
    if (*ve_cmd) return cmd_verify(g, ve, out);
  } catch (const Error& e) {
    err << "fibquasi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "fibquasi: internal inconsistency: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "fibquasi: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fibquasi::cli
