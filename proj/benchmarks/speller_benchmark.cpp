// Copyright 2026 The sindhispell Authors
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

#include <cstddef>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "sindhispell/edit_model.hpp"
#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"
#include "sindhispell/suggester.hpp"

namespace sindhispell {
namespace {

const ConfusionTable& tables() { return ConfusionTable::builtin(); }

// Distinct random words over the builtin alphabet.
std::vector<GraphemeSeq> random_words(std::size_t count, std::uint64_t seed) {
  const auto& letters = tables().alphabet().letters();
  std::mt19937_64 gen(seed);
  std::unordered_set<std::string> seen;
  std::vector<GraphemeSeq> out;
  while (out.size() < count) {
    const std::size_t length = 3 + gen() % 8;
    std::string text;
    for (std::size_t i = 0; i < length; ++i) text += to_utf8(letters[gen() % letters.size()]);
    if (seen.insert(text).second) out.push_back(normalize(text));
  }
  return out;
}

// One random single edit of each of `count` lexicon words.
std::vector<GraphemeSeq> corrupt(const std::vector<GraphemeSeq>& words, std::size_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<GraphemeSeq> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto variants = single_edits(words[gen() % words.size()], tables().alphabet()).variants;
    out.push_back(variants[gen() % variants.size()].first);
  }
  return out;
}

struct Fixture {
  std::vector<GraphemeSeq> words;
  Lexicon lexicon;
  std::vector<GraphemeSeq> tokens;

  explicit Fixture(std::size_t size)
      : words(random_words(size, size)),
        lexicon(Lexicon::from_words(words)),
        tokens(corrupt(words, 256, 7)) {}
};

const Fixture& fixture(std::size_t size) {
  static const Fixture small(1000);
  static const Fixture large(50000);
  return size == 1000 ? small : large;
}

void BM_Suggest(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  RankingConfig config;
  config.max_distance = static_cast<std::size_t>(state.range(1));
  const Speller speller(f.lexicon, tables(), KeyboardLayout::builtin(), config);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(speller.suggest(f.tokens[i++ % f.tokens.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Suggest)->Args({1000, 1})->Args({50000, 1})->Args({1000, 2})->Args({50000, 2});

void BM_GenerateCandidates(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_candidates(f.tokens[i++ % f.tokens.size()], f.lexicon, 1));
  }
}
BENCHMARK(BM_GenerateCandidates)->Arg(1000)->Arg(50000);

void BM_DamerauDistance(benchmark::State& state) {
  const Fixture& f = fixture(1000);
  std::size_t i = 0;
  for (auto _ : state) {
    const GraphemeSeq& a = f.words[i % f.words.size()];
    const GraphemeSeq& b = f.tokens[i % f.tokens.size()];
    benchmark::DoNotOptimize(damerau_distance(a, b));
    ++i;
  }
}
BENCHMARK(BM_DamerauDistance);

void BM_Normalize(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize("پاڪستان"));
    benchmark::DoNotOptimize(normalize("ﭘﺎﻛﺴﺘﺎﻥ"));
  }
}
BENCHMARK(BM_Normalize);

}  // namespace
}  // namespace sindhispell

BENCHMARK_MAIN();
