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

#ifndef FIBQUASI_SERIALIZE_HPP_
#define FIBQUASI_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "fibquasi/closed_form.hpp"
#include "fibquasi/fib.hpp"
#include "fibquasi/quasi.hpp"
#include "fibquasi/verify.hpp"
#include "fibquasi/word.hpp"

namespace fibquasi {

// Insertion-ordered so documents keep their field layout through a
// parse/dump round trip.
using Json = nlohmann::ordered_json;

void to_json(Json& j, const Word& w);
void from_json(const Json& j, Word& w);
void to_json(Json& j, const WordSet& set);
void from_json(const Json& j, WordSet& set);

void to_json(Json& j, const Decomposition& d);
// A list of {kind: "F_m" | "F_{m-1}", start}.
void to_json(Json& j, const Expansion& e);
void to_json(Json& j, const SeedWitness& w);

void to_json(Json& j, const FactorForm& f);
void from_json(const Json& j, FactorForm& f);
void to_json(Json& j, const EnumResult& r);
void from_json(const Json& j, EnumResult& r);

void to_json(Json& j, const Attribution& a);
void to_json(Json& j, const QuasiReport& r);
void to_json(Json& j, const BatteryReport& b);
void to_json(Json& j, const SuiteSummary& s);
void to_json(Json& j, const SuiteResult& r);

// One QuasiReport per line, then one line per battery, then the summary.
std::string to_json_lines(const SuiteResult& result);

}  // namespace fibquasi

#endif  // FIBQUASI_SERIALIZE_HPP_
