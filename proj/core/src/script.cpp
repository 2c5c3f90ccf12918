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

#include "sindhispell/script.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string_view>

#include "default_data.hpp"
#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

struct SkeletonEntry {
  std::u32string_view letters;
  std::string_view skeleton;
};

// Letters sharing a dotless base glyph (rasm). Farsi yeh is drawn on the
// yeh body and grouped with it.
constexpr SkeletonEntry kSkeletons[] = {
    {U"اآأإٱ", "alef"},     {U"بٻڀتٿٽٺثپ", "beh"}, {U"جڄڃچڇحخ", "hah"},
    {U"دڌڏڊڍذ", "dal"},    {U"رڙز", "reh"},        {U"سش", "seen"},
    {U"صض", "sad"},        {U"طظ", "tah"},         {U"عغ", "ain"},
    {U"فڦ", "feh"},        {U"ق", "qaf"},          {U"ڪ", "swash-kaf"},
    {U"کگڳڱ", "gaf"},      {U"ل", "lam"},          {U"م", "meem"},
    {U"نڻ", "noon"},       {U"وؤ", "waw"},         {U"ه", "heh"},
    {U"ھ", "knotted-heh"}, {U"يئی", "yeh"},
};

std::vector<LetterGroup> read_groups(std::istream& in) {
  std::vector<LetterGroup> groups;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    groups.push_back(parse_letter_line(line, line_no));
  }
  return groups;
}

}  // namespace

std::vector<Letter> parse_letter_line(std::string_view line, std::size_t line_no) {
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(' ', start);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view member = line.substr(start, end - start);
    if (member.empty()) throw ParseError(line_no, "members must be separated by single spaces");
    GraphemeSeq seq;
    try {
      seq = normalize(member);
    } catch (const TextError& e) {
      throw ParseError(line_no, e.what());
    }
    if (seq.size() != 1 || decode_utf8(seq.utf8()).size() != 1) {
      throw ParseError(line_no, "'" + std::string(member) + "' is not a single letter");
    }
    letters.push_back(seq.base(0));
    start = end + 1;
  }
  return letters;
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!index_.emplace(letters_[i], i).second) {
      throw ParseError(0, "duplicate letter " + to_utf8(letters_[i]) + " in alphabet");
    }
  }
}

std::optional<std::string_view> skeleton_of(Letter c) {
  for (const SkeletonEntry& entry : kSkeletons) {
    if (entry.letters.find(c) != std::u32string_view::npos) return entry.skeleton;
  }
  return std::nullopt;
}

std::vector<LetterGroup> ConfusionTable::skeleton_groups(const Alphabet& alphabet) {
  std::vector<std::string_view> order;
  std::vector<LetterGroup> groups;
  for (const Letter c : alphabet.letters()) {
    const auto skeleton = skeleton_of(c);
    if (!skeleton) continue;
    const auto it = std::find(order.begin(), order.end(), *skeleton);
    if (it == order.end()) {
      order.push_back(*skeleton);
      groups.push_back({c});
    } else {
      groups[static_cast<std::size_t>(it - order.begin())].push_back(c);
    }
  }
  std::erase_if(groups, [](const LetterGroup& g) { return g.size() < 2; });
  return groups;
}

ConfusionTable::ConfusionTable(std::vector<LetterGroup> phonetic, std::vector<LetterGroup> visual,
                               std::string source)
    : phonetic_groups_(std::move(phonetic)),
      visual_groups_(std::move(visual)),
      source_(std::move(source)) {
  std::vector<Letter> letters;
  for (std::size_t g = 0; g < phonetic_groups_.size(); ++g) {
    for (const Letter c : phonetic_groups_[g]) {
      if (!sound_code_.emplace(c, static_cast<SoundCode>(g + 1)).second) {
        throw ParseError(0, "letter " + to_utf8(c) + " belongs to two phonetic groups");
      }
      letters.push_back(c);
    }
  }
  alphabet_ = Alphabet(std::move(letters));
  for (std::size_t g = 0; g < visual_groups_.size(); ++g) {
    for (const Letter c : visual_groups_[g]) {
      if (!alphabet_.contains(c)) {
        throw ParseError(0, "visual group member " + to_utf8(c) + " is not in the alphabet");
      }
      visual_membership_[c].push_back(g);
    }
  }
}

const ConfusionTable& ConfusionTable::builtin() {
  static const ConfusionTable table = [] {
    std::istringstream phonetic{std::string(internal::default_phonetic_data())};
    return load(phonetic, nullptr, "builtin");
  }();
  return table;
}

ConfusionTable ConfusionTable::load(std::istream& phonetic, std::istream* visual,
                                    std::string source) {
  std::vector<LetterGroup> phonetic_groups = read_groups(phonetic);
  if (visual != nullptr) {
    return ConfusionTable(std::move(phonetic_groups), read_groups(*visual), std::move(source));
  }
  // The alphabet is needed before the skeleton groups can be restricted.
  ConfusionTable table(std::move(phonetic_groups), {}, std::move(source));
  table.visual_groups_ = skeleton_groups(table.alphabet_);
  for (std::size_t g = 0; g < table.visual_groups_.size(); ++g) {
    for (const Letter c : table.visual_groups_[g]) table.visual_membership_[c].push_back(g);
  }
  return table;
}

std::optional<SoundCode> ConfusionTable::phonetic_group(Letter c) const {
  const auto it = sound_code_.find(c);
  if (it == sound_code_.end()) return std::nullopt;
  return it->second;
}

bool ConfusionTable::visually_similar(Letter a, Letter b) const {
  if (a == b) return true;
  const auto ia = visual_membership_.find(a);
  const auto ib = visual_membership_.find(b);
  if (ia == visual_membership_.end() || ib == visual_membership_.end()) return false;
  for (const std::size_t g : ia->second) {
    if (std::find(ib->second.begin(), ib->second.end(), g) != ib->second.end()) return true;
  }
  return false;
}

KeyboardLayout::KeyboardLayout(std::vector<std::vector<Letter>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (!positions_.emplace(rows_[r][c], std::pair{r, c}).second) {
        throw ParseError(r + 1, "letter " + to_utf8(rows_[r][c]) + " appears twice in layout");
      }
    }
  }
}

const KeyboardLayout& KeyboardLayout::builtin() {
  static const KeyboardLayout layout = [] {
    std::istringstream in{std::string(internal::default_layout_data())};
    return load(in);
  }();
  return layout;
}

KeyboardLayout KeyboardLayout::load(std::istream& in) {
  std::vector<std::vector<Letter>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    rows.push_back(parse_letter_line(line, line_no));
  }
  return KeyboardLayout(std::move(rows));
}

std::optional<std::pair<std::size_t, std::size_t>> KeyboardLayout::position(Letter c) const {
  const auto it = positions_.find(c);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

bool KeyboardLayout::adjacent(Letter a, Letter b) const {
  if (a == b) return false;
  const auto pa = position(a);
  const auto pb = position(b);
  if (!pa || !pb) return false;
  // Work in half-key units: x = 2 * column + row.
  const auto row_a = static_cast<long>(pa->first), row_b = static_cast<long>(pb->first);
  const long xa = 2 * static_cast<long>(pa->second) + row_a;
  const long xb = 2 * static_cast<long>(pb->second) + row_b;
  return std::abs(row_a - row_b) <= 1 && std::abs(xa - xb) <= 2;
}

std::vector<Letter> KeyboardLayout::neighbours(Letter c) const {
  std::vector<Letter> out;
  for (const auto& row : rows_) {
    for (const Letter other : row) {
      if (adjacent(c, other)) out.push_back(other);
    }
  }
  return out;
}

}  // namespace sindhispell
