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

#include "fibquasi/serialize.hpp"

#include "fibquasi/error.hpp"

namespace fibquasi {

void to_json(Json& j, const Word& w) { j = w.str(); }

void from_json(const Json& j, Word& w) { w = Word(j.get<std::string>()); }

void to_json(Json& j, const WordSet& set) {
  j = Json::array();
  for (const Word& w : set) j.push_back(w.str());
}

void from_json(const Json& j, WordSet& set) {
  set = WordSet();
  for (const Json& item : j) set.insert(item.get<Word>());
}

void to_json(Json& j, const Decomposition& d) {
  j = Json{{"p", d.p_part}, {"delta", d.delta}};
}

void to_json(Json& j, const Expansion& e) {
  j = Json::array();
  for (const ExpansionItem& item : e.items) {
    j.push_back({{"kind", item.kind == FactorKind::kBig ? "F_m" : "F_{m-1}"},
                 {"start", item.start}});
  }
}

void to_json(Json& j, const SeedWitness& w) {
  j = Json{{"left", w.left_ext}, {"right", w.right_ext}, {"positions", w.positions}};
}

void to_json(Json& j, const FactorForm& f) {
  j = Json{{"kind", to_string(f.kind)},
           {"m", f.base},
           {"left_len", f.left_len},
           {"right_len", f.right_len}};
}

void from_json(const Json& j, FactorForm& f) {
  const std::string kind = j.at("kind").get<std::string>();
  bool known = false;
  for (FormKind k : {FormKind::kPlainFib, FormKind::kFibPlusPrefix, FormKind::kSuffixPlusFib,
                     FormKind::kSuffixFibPrefix, FormKind::kSuffixFibFibPrefix,
                     FormKind::kSuffixFibTailPrefix, FormKind::kWindow}) {
    if (to_string(k) == kind) {
      f.kind = k;
      known = true;
    }
  }
  if (!known) throw Error(ErrorCode::kConfig, "unknown form kind '" + kind + "'");
  f.base = j.at("m").get<unsigned>();
  f.left_len = j.at("left_len").get<std::size_t>();
  f.right_len = j.at("right_len").get<std::size_t>();
}

void to_json(Json& j, const EnumResult& r) {
  j = Json{{"n", r.n},
           {"category", to_string(r.category)},
           {"forms", r.forms},
           {"words", r.materialized}};
}

void from_json(const Json& j, EnumResult& r) {
  r.n = j.at("n").get<unsigned>();
  const auto category = parse_category(j.at("category").get<std::string>());
  if (!category) throw Error(ErrorCode::kConfig, "unknown category");
  r.category = *category;
  r.forms = j.at("forms").get<std::vector<FactorForm>>();
  r.materialized = j.at("words").get<WordSet>();
}

void to_json(Json& j, const Attribution& a) {
  j = Json{{"word", a.word}, {"direction", to_string(a.direction)}, {"forms", a.forms}};
}

void to_json(Json& j, const QuasiReport& r) {
  j = Json{{"type", "cell"},
           {"n", r.n},
           {"category", to_string(r.category)},
           {"enumerated_count", r.enumerated_count},
           {"oracle_count", r.oracle_count},
           {"missing", r.missing},
           {"extra", r.extra},
           {"attributions", r.attributions},
           {"status", to_string(r.status)}};
  if (!r.error.empty()) j["error"] = r.error;
  j["elapsed_us"] = r.elapsed.count();
}

void to_json(Json& j, const BatteryReport& b) {
  j = Json{{"type", "battery"},
           {"name", b.name},
           {"checked", b.checked},
           {"failures", b.failures},
           {"note", b.note},
           {"passed", b.passed()}};
}

void to_json(Json& j, const SuiteSummary& s) {
  j = Json{{"type", "summary"},
           {"cells", s.cells},
           {"passed", s.passed},
           {"failed", s.failed},
           {"documented", s.documented},
           {"batteries", s.batteries},
           {"batteries_failed", s.batteries_failed}};
}

void to_json(Json& j, const SuiteResult& r) {
  j = Json{{"reports", r.reports}, {"batteries", r.batteries}, {"summary", r.summary}};
}

std::string to_json_lines(const SuiteResult& result) {
  std::string out;
  for (const QuasiReport& r : result.reports) out += Json(r).dump() + '\n';
  for (const BatteryReport& b : result.batteries) out += Json(b).dump() + '\n';
  out += Json(result.summary).dump() + '\n';
  return out;
}

}  // namespace fibquasi
