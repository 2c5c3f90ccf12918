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
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sindhispell/grapheme.hpp"

namespace sindhispell {

// Ordered set of base letters used for edit enumeration and injection.
class Alphabet {
 public:
  Alphabet() = default;
  // Throws ParseError on duplicates.
  explicit Alphabet(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool contains(Letter c) const noexcept { return index_.contains(c); }

 private:
  std::vector<Letter> letters_;
  std::unordered_map<Letter, std::size_t> index_;
};

using SoundCode = int;

// A group of letters as read from a confusion file.
using LetterGroup = std::vector<Letter>;

// Phonetic (sound-code) groups and visual (shared skeleton) groups over the
// alphabet. The alphabet is the union of the phonetic groups in file order.
class ConfusionTable {
 public:
  // Built-in phonetic data plus skeleton-generated visual groups.
  static const ConfusionTable& builtin();

  // Confusion files: one group per line, members separated by single
  // spaces, '#' lines and blank lines ignored. Without a visual stream the
  // skeleton-generated default groups are used.
  static ConfusionTable load(std::istream& phonetic, std::istream* visual = nullptr,
                             std::string source = "stream");

  // Visual groups from the built-in rasm (dotless skeleton) table,
  // restricted to `alphabet`; singleton skeletons are omitted.
  static std::vector<LetterGroup> skeleton_groups(const Alphabet& alphabet);

  std::optional<SoundCode> phonetic_group(Letter c) const;
  // Reflexive; symmetric. Letters outside every visual group are only
  // similar to themselves.
  bool visually_similar(Letter a, Letter b) const;

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<LetterGroup>& phonetic_groups() const noexcept { return phonetic_groups_; }
  const std::vector<LetterGroup>& visual_groups() const noexcept { return visual_groups_; }
  const std::string& source() const noexcept { return source_; }

 private:
  ConfusionTable(std::vector<LetterGroup> phonetic, std::vector<LetterGroup> visual,
                 std::string source);

  std::vector<LetterGroup> phonetic_groups_;
  std::vector<LetterGroup> visual_groups_;
  std::string source_;
  Alphabet alphabet_;
  std::unordered_map<Letter, SoundCode> sound_code_;
  std::unordered_map<Letter, std::vector<std::size_t>> visual_membership_;
};

// Skeleton class of a letter in the built-in rasm table, if it has one.
std::optional<std::string_view> skeleton_of(Letter c);

// Key grid. Row r is offset r/2 key widths to the right; two keys are
// adjacent when their row distance is at most 1 and their horizontal
// distance at most one key width (Chebyshev distance 1), excluding the key
// itself.
class KeyboardLayout {
 public:
  static const KeyboardLayout& builtin();
  // One row of space-separated letters per line; '#' lines ignored.
  // Throws ParseError when a letter repeats.
  static KeyboardLayout load(std::istream& in);

  bool adjacent(Letter a, Letter b) const;
  std::vector<Letter> neighbours(Letter c) const;
  std::optional<std::pair<std::size_t, std::size_t>> position(Letter c) const;
  const std::vector<std::vector<Letter>>& rows() const noexcept { return rows_; }

 private:
  explicit KeyboardLayout(std::vector<std::vector<Letter>> rows);

  std::vector<std::vector<Letter>> rows_;
  std::unordered_map<Letter, std::pair<std::size_t, std::size_t>> positions_;
};

// Parses one group line into letters; each member must normalize to a
// single one-scalar cluster. Used by the confusion and layout readers.
std::vector<Letter> parse_letter_line(std::string_view line, std::size_t line_no);

}  // namespace sindhispell
