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

#ifndef SINDHISPELL_TESTS_SUPPORT_ORACLES_HPP_
#define SINDHISPELL_TESTS_SUPPORT_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"

namespace sindhispell::testing {

// Independent reference implementations used to check the library.

std::vector<std::string> clusters_of(const GraphemeSeq& word);

// Full-matrix optimal string alignment distance over cluster strings.
std::size_t osa_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b);
std::size_t osa_oracle(const GraphemeSeq& a, const GraphemeSeq& b);

// Lexicon words within `bound` of `word` (word itself excluded), by linear
// scan with osa_oracle.
std::set<std::string> scan_within(const GraphemeSeq& word, const Lexicon& lexicon,
                                  std::size_t bound);

// Every single-edit outcome of `word` over `letters`, before deduplication.
std::vector<std::string> enumerate_single_edits(const std::vector<std::string>& word,
                                                const std::vector<std::string>& letters);

// `count` distinct words of `min_len`..`max_len` letters drawn from the
// built-in alphabet with std::mt19937_64.
std::vector<GraphemeSeq> synthetic_words(std::size_t count, std::uint64_t seed,
                                         std::size_t min_len = 3, std::size_t max_len = 8);

// The built-in alphabet letters as UTF-8 strings.
std::vector<std::string> alphabet_strings();

}  // namespace sindhispell::testing

#endif  // SINDHISPELL_TESTS_SUPPORT_ORACLES_HPP_
