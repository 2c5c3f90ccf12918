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

#include "sindhispell/lexicon.hpp"

#include <algorithm>
#include <charconv>

#include "sindhispell/error.hpp"

namespace sindhispell {

std::vector<std::string> deletion_keys(const GraphemeSeq& word) {
  std::vector<std::string> keys;
  keys.reserve(word.size() + 1);
  keys.push_back(word.utf8());
  const std::string& text = word.utf8();
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::string_view cluster = word[i];
    const auto offset = static_cast<std::size_t>(cluster.data() - text.data());
    std::string key;
    key.reserve(text.size() - cluster.size());
    key.append(text, 0, offset);
    key.append(text, offset + cluster.size());
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin() + 1, keys.end());
  keys.erase(std::unique(keys.begin() + 1, keys.end()), keys.end());
  return keys;
}

Lexicon::Lexicon(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.word < b.word; });
  for (Entry& e : entries) {
    if (e.word.empty()) continue;
    if (!entries_.empty() && entries_.back().word == e.word) {
      entries_.back().frequency = std::max(entries_.back().frequency, e.frequency);
    } else {
      entries_.push_back(std::move(e));
    }
  }
  index_.reserve(entries_.size());
  for (std::size_t id = 0; id < entries_.size(); ++id) {
    const auto id32 = static_cast<std::uint32_t>(id);
    index_.emplace(entries_[id].word.utf8(), id32);
    for (std::string& key : deletion_keys(entries_[id].word)) {
      deletions_[std::move(key)].push_back(id32);
    }
  }
}

Lexicon Lexicon::from_entries(std::vector<Entry> entries) { return Lexicon(std::move(entries)); }

Lexicon Lexicon::from_words(std::span<const GraphemeSeq> words) {
  std::vector<Entry> entries;
  entries.reserve(words.size());
  for (const GraphemeSeq& w : words) entries.push_back({w, 0});
  return Lexicon(std::move(entries));
}

Lexicon Lexicon::load(std::istream& in) {
  std::vector<Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::string_view word = line;
    std::uint64_t frequency = 0;
    if (const auto tab = word.find('\t'); tab != std::string_view::npos) {
      const std::string_view field = word.substr(tab + 1);
      word = word.substr(0, tab);
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), frequency);
      if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
        throw ParseError(line_no, "malformed frequency '" + std::string(field) + "'");
      }
    }
    GraphemeSeq normalized;
    try {
      normalized = normalize(word);
    } catch (const TextError& e) {
      throw ParseError(line_no, e.what());
    }
    if (normalized.empty()) throw ParseError(line_no, "empty word");
    entries.push_back({std::move(normalized), frequency});
  }
  return Lexicon(std::move(entries));
}

std::uint64_t Lexicon::frequency(const GraphemeSeq& word) const {
  const auto it = index_.find(word.utf8());
  return it == index_.end() ? 0 : entries_[it->second].frequency;
}

std::span<const std::uint32_t> Lexicon::deletion_neighbours(std::string_view key) const {
  const auto it = deletions_.find(std::string(key));
  if (it == deletions_.end()) return {};
  return it->second;
}

void Lexicon::dump(std::ostream& out) const {
  for (const Entry& e : entries_) {
    out << e.word.utf8();
    if (e.frequency != 0) out << '\t' << e.frequency;
    out << '\n';
  }
}

}  // namespace sindhispell
