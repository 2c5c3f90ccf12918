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

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sindhispell/grapheme.hpp"

namespace sindhispell {

// Immutable word list with optional frequency counts.
//
// Entries are kept in codepoint order, so iteration and dump() are
// deterministic. A one-deletion neighbourhood index is built at load time
// for distance-1 candidate lookup.
class Lexicon {
 public:
  struct Entry {
    GraphemeSeq word;
    std::uint64_t frequency = 0;
  };

  Lexicon() = default;

  // One word per line with an optional TAB and decimal frequency. Blank
  // lines and lines starting with '#' are skipped; duplicates keep the
  // larger frequency. Throws ParseError naming the line.
  static Lexicon load(std::istream& in);
  static Lexicon from_entries(std::vector<Entry> entries);
  static Lexicon from_words(std::span<const GraphemeSeq> words);

  bool contains(const GraphemeSeq& word) const { return index_.contains(word.utf8()); }
  std::uint64_t frequency(const GraphemeSeq& word) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry& entry(std::size_t id) const { return entries_[id]; }

  // Ids of entries whose one-cluster deletions (or the word itself) equal
  // `key`.
  std::span<const std::uint32_t> deletion_neighbours(std::string_view key) const;

  // Same format as load(), sorted by codepoint. Zero counts are omitted.
  void dump(std::ostream& out) const;

 private:
  explicit Lexicon(std::vector<Entry> entries);

  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> deletions_;
};

// Keys of the one-deletion neighbourhood of `word`: the word itself and
// every variant with one cluster removed, deduplicated.
std::vector<std::string> deletion_keys(const GraphemeSeq& word);

}  // namespace sindhispell
