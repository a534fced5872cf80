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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "fibquasi/fib.hpp"
#include "fibquasi/quasi.hpp"

namespace {

using namespace fibquasi;

std::vector<Word> random_words(std::size_t count, std::size_t length) {
  std::mt19937_64 rng(42);
  std::bernoulli_distribution coin(0.5);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s(length, 'a');
    for (char& c : s) c = coin(rng) ? 'b' : 'a';
    out.emplace_back(s);
  }
  return out;
}

// Every distinct factor of y tested with the witness search.
void BM_IsSeedAllFactors(benchmark::State& state) {
  const Word y = fib_word(static_cast<unsigned>(state.range(0))).word;
  const WordSet factors = distinct_factors(y);
  for (auto _ : state) {
    for (const Word& u : factors) benchmark::DoNotOptimize(is_seed(u, y).is_seed);
  }
}
BENCHMARK(BM_IsSeedAllFactors)->DenseRange(5, 9, 2);

// Same, with the occurrence-gap test.
void BM_IsSeedFastAllFactors(benchmark::State& state) {
  const Word y = fib_word(static_cast<unsigned>(state.range(0))).word;
  const WordSet factors = distinct_factors(y);
  for (auto _ : state) {
    for (const Word& u : factors) benchmark::DoNotOptimize(is_seed_fast(u, y));
  }
}
BENCHMARK(BM_IsSeedFastAllFactors)->DenseRange(5, 9, 2);

void BM_SeedsOfRandom(benchmark::State& state) {
  const auto words = random_words(16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Word& y : words) benchmark::DoNotOptimize(seeds_of(y));
  }
}
BENCHMARK(BM_SeedsOfRandom)->RangeMultiplier(2)->Range(16, 128);

void BM_CircularCoversFib(benchmark::State& state) {
  const Word y = fib_word(static_cast<unsigned>(state.range(0))).word;
  for (auto _ : state) benchmark::DoNotOptimize(circular_covers_of(y));
}
BENCHMARK(BM_CircularCoversFib)->DenseRange(6, 12, 2);

}  // namespace
