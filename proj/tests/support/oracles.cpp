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

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "sindhispell/script.hpp"

namespace sindhispell::testing {

std::vector<std::string> clusters_of(const GraphemeSeq& word) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < word.size(); ++i) out.emplace_back(word[i]);
  return out;
}

std::size_t osa_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
      }
    }
  }
  return d[n][m];
}

std::size_t osa_oracle(const GraphemeSeq& a, const GraphemeSeq& b) {
  return osa_oracle(clusters_of(a), clusters_of(b));
}

std::set<std::string> scan_within(const GraphemeSeq& word, const Lexicon& lexicon,
                                  std::size_t bound) {
  const auto clusters = clusters_of(word);
  std::set<std::string> out;
  for (const auto& entry : lexicon.entries()) {
    if (entry.word == word) continue;
    if (osa_oracle(clusters, clusters_of(entry.word)) <= bound) out.insert(entry.word.utf8());
  }
  return out;
}

std::vector<std::string> enumerate_single_edits(const std::vector<std::string>& word,
                                                const std::vector<std::string>& letters) {
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= word.size(); ++i) {
    for (const auto& c : letters) {
      auto w = word;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), c);
      out.push_back(join(w));
    }
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto w = word;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(join(w));
  }
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (const auto& c : letters) {
      if (c == word[i]) continue;
      auto w = word;
      w[i] = c;
      out.push_back(join(w));
    }
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    auto w = word;
    std::swap(w[i], w[i + 1]);
    out.push_back(join(w));
  }
  return out;
}

std::vector<std::string> alphabet_strings() {
  std::vector<std::string> out;
  for (Letter c : ConfusionTable::builtin().alphabet().letters()) out.push_back(to_utf8(c));
  return out;
}

std::vector<GraphemeSeq> synthetic_words(std::size_t count, std::uint64_t seed,
                                         std::size_t min_len, std::size_t max_len) {
  const auto letters = alphabet_strings();
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::unordered_set<std::string> seen;
  std::vector<GraphemeSeq> out;
  while (out.size() < count) {
    std::string w;
    for (std::size_t i = len(gen); i > 0; --i) w += letters[pick(gen)];
    GraphemeSeq seq = normalize(w);
    if (seen.insert(seq.utf8()).second) out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace sindhispell::testing
