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

#include <gtest/gtest.h>
#include <unicode/uchar.h>

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sindhispell/error.hpp"
#include "sindhispell/grapheme.hpp"

namespace sindhispell {
namespace {

const ConfusionTable& tables() { return ConfusionTable::builtin(); }

std::vector<Letter> letters() { return tables().alphabet().letters(); }

// Reference skeleton: ICU's Arabic joining group, with Farsi Yeh merged
// into Yeh because the two differ only in final-form dots.
int joining_group(Letter c) {
  const int group = u_getIntPropertyValue(static_cast<UChar32>(c), UCHAR_JOINING_GROUP);
  return group == U_JG_FARSI_YEH ? U_JG_YEH : group;
}

bool oracle_visually_similar(Letter a, Letter b) {
  if (a == b) return true;
  const int ga = joining_group(a);
  return ga != U_JG_NO_JOINING_GROUP && ga == joining_group(b);
}

TEST(AlphabetTest, DefaultHasFiftyTwoLettersInTwentyTwoGroups) {
  EXPECT_EQ(tables().alphabet().size(), 52u);
  EXPECT_EQ(tables().phonetic_groups().size(), 22u);
  std::size_t members = 0;
  for (const auto& g : tables().phonetic_groups()) members += g.size();
  EXPECT_EQ(members, 52u);
}

TEST(AlphabetTest, RejectsDuplicates) {
  EXPECT_THROW(Alphabet({U'ا', U'ب', U'ا'}), ParseError);
}

TEST(PhoneticGroupTest, StatedPairsShareAGroup) {
  ASSERT_TRUE(tables().phonetic_group(U'ت').has_value());
  EXPECT_EQ(tables().phonetic_group(U'ت'), tables().phonetic_group(U'ط'));
  ASSERT_TRUE(tables().phonetic_group(U'ه').has_value());
  EXPECT_EQ(tables().phonetic_group(U'ه'), tables().phonetic_group(U'ح'));
  const auto alif = tables().phonetic_group(U'ا');
  ASSERT_TRUE(alif.has_value());
  for (Letter c : {U'آ', U'ء', U'ي', U'ئ'}) EXPECT_EQ(tables().phonetic_group(c), alif);
  EXPECT_FALSE(tables().phonetic_group(U'x').has_value());
}

TEST(PhoneticGroupTest, GroupsPartitionTheAlphabet) {
  std::map<Letter, int> seen;
  for (const auto& g : tables().phonetic_groups()) {
    for (Letter c : g) ++seen[c];
  }
  for (const auto& [c, n] : seen) EXPECT_EQ(n, 1) << to_utf8(c);
  for (Letter c : letters()) {
    EXPECT_TRUE(tables().phonetic_group(c).has_value()) << to_utf8(c);
    EXPECT_EQ(seen.count(c), 1u);
  }
}

TEST(PhoneticGroupTest, SoundCodeIsTheLinePosition) {
  const auto& groups = tables().phonetic_groups();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (Letter c : groups[i]) EXPECT_EQ(tables().phonetic_group(c), static_cast<int>(i + 1));
  }
}

TEST(VisualSimilarityTest, Examples) {
  EXPECT_TRUE(tables().visually_similar(U'ب', U'پ'));
  EXPECT_FALSE(tables().visually_similar(U'ا', U'ب'));
  EXPECT_TRUE(tables().visually_similar(U'ت', U'ت'));
}

TEST(VisualSimilarityTest, MatchesJoiningGroupOracleOverAllPairs) {
  for (Letter a : letters()) {
    for (Letter b : letters()) {
      EXPECT_EQ(tables().visually_similar(a, b), oracle_visually_similar(a, b))
          << to_utf8(a) << " " << to_utf8(b);
    }
  }
}

TEST(VisualSimilarityTest, SymmetricAndReflexive) {
  for (Letter a : letters()) {
    EXPECT_TRUE(tables().visually_similar(a, a));
    for (Letter b : letters()) {
      EXPECT_EQ(tables().visually_similar(a, b), tables().visually_similar(b, a));
    }
  }
}

TEST(ConfusionTableTest, GroupMembersAreAlphabetLetters) {
  for (const auto& g : tables().visual_groups()) {
    EXPECT_GE(g.size(), 2u);
    for (Letter c : g) EXPECT_TRUE(tables().alphabet().contains(c)) << to_utf8(c);
  }
}

TEST(ConfusionTableTest, ShippedFilesMatchBuiltin) {
  std::ifstream phonetic(SINDHISPELL_CORE_DATA_DIR "/phonetic_groups.txt");
  std::ifstream visual(SINDHISPELL_CORE_DATA_DIR "/visual_groups.txt");
  ASSERT_TRUE(phonetic && visual);
  const ConfusionTable loaded = ConfusionTable::load(phonetic, &visual, "shipped");
  EXPECT_EQ(loaded.phonetic_groups(), tables().phonetic_groups());
  EXPECT_EQ(loaded.visual_groups(), tables().visual_groups());
  EXPECT_EQ(loaded.source(), "shipped");
}

TEST(ConfusionTableTest, SkeletonGroupsOmitSingletons) {
  const auto groups = ConfusionTable::skeleton_groups(Alphabet({U'ب', U'ت', U'ق', U'ا'}));
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(std::set<Letter>(groups[0].begin(), groups[0].end()), (std::set<Letter>{U'ب', U'ت'}));
}

TEST(ConfusionTableTest, LoadErrors) {
  {
    std::istringstream phonetic("ب ت\nت ث\n");
    EXPECT_THROW(ConfusionTable::load(phonetic), ParseError);
  }
  {
    std::istringstream phonetic("ب ت\n");
    std::istringstream visual("ب پ\n");
    EXPECT_THROW(ConfusionTable::load(phonetic, &visual), ParseError);
  }
  {
    std::istringstream phonetic("ب  ت\n");
    EXPECT_THROW(ConfusionTable::load(phonetic), ParseError);
  }
  {
    std::istringstream phonetic("# comment\n\nب ت\nبا\n");
    try {
      ConfusionTable::load(phonetic);
      FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 4u);
    }
  }
}

TEST(ConfusionTableTest, LoadedTableUsesFileOrder) {
  std::istringstream phonetic("# groups\nت ط\nب\n");
  const ConfusionTable t = ConfusionTable::load(phonetic);
  EXPECT_EQ(t.alphabet().letters(), (std::vector<Letter>{U'ت', U'ط', U'ب'}));
  EXPECT_EQ(t.phonetic_group(U'ب'), 2);
  // Default visual groups restricted to the alphabet: ب and ت share a skeleton.
  EXPECT_TRUE(t.visually_similar(U'ب', U'ت'));
  EXPECT_FALSE(t.visually_similar(U'ت', U'ط'));
}

// Reads the shipped layout as plain text.
std::vector<std::vector<std::string>> layout_rows() {
  std::ifstream in(SINDHISPELL_CORE_DATA_DIR "/keyboard_layout.txt");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream keys(line);
    std::vector<std::string> row;
    std::string key;
    while (keys >> key) row.push_back(key);
    rows.push_back(row);
  }
  return rows;
}

TEST(KeyboardLayoutTest, HorizontalNeighboursFromTheFileAreAdjacent) {
  const auto rows = layout_rows();
  ASSERT_EQ(rows.size(), 4u);
  const auto& layout = KeyboardLayout::builtin();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      EXPECT_TRUE(layout.adjacent(decode_utf8(row[i])[0], decode_utf8(row[i + 1])[0]))
          << row[i] << " " << row[i + 1];
    }
  }
}

TEST(KeyboardLayoutTest, MatchesGeometricOracle) {
  // Key centres: column plus half a key per row of offset.
  const auto rows = layout_rows();
  struct Key {
    Letter letter;
    double x;
    double y;
  };
  std::vector<Key> keys;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      keys.push_back({decode_utf8(rows[r][c])[0], static_cast<double>(c) + 0.5 * r,
                      static_cast<double>(r)});
    }
  }
  const auto& layout = KeyboardLayout::builtin();
  for (const Key& a : keys) {
    for (const Key& b : keys) {
      const bool expected =
          a.letter != b.letter && std::abs(a.y - b.y) <= 1.0 && std::abs(a.x - b.x) <= 1.0;
      EXPECT_EQ(layout.adjacent(a.letter, b.letter), expected)
          << to_utf8(a.letter) << " " << to_utf8(b.letter);
    }
  }
}

TEST(KeyboardLayoutTest, SymmetricIrreflexiveAndAbsentKeys) {
  const auto& layout = KeyboardLayout::builtin();
  for (Letter a : letters()) {
    EXPECT_FALSE(layout.adjacent(a, a));
    EXPECT_FALSE(layout.adjacent(a, U'x'));
    EXPECT_FALSE(layout.adjacent(U'x', a));
    for (Letter b : letters()) EXPECT_EQ(layout.adjacent(a, b), layout.adjacent(b, a));
  }
  EXPECT_FALSE(layout.position(U'x').has_value());
}

TEST(KeyboardLayoutTest, CoversTheAlphabet) {
  for (Letter c : letters()) EXPECT_TRUE(KeyboardLayout::builtin().position(c)) << to_utf8(c);
}

TEST(KeyboardLayoutTest, LoadRejectsRepeatedKeys) {
  std::istringstream in("ب ت\nت ث\n");
  EXPECT_THROW(KeyboardLayout::load(in), ParseError);
}

TEST(KeyboardLayoutTest, NeighboursAreTheAdjacentKeys) {
  std::istringstream in("ا ب ت\nث ج ح\n");
  const KeyboardLayout layout = KeyboardLayout::load(in);
  // Row 1 is shifted half a key: ج sits between ب and ت.
  const auto n = layout.neighbours(U'ج');
  EXPECT_EQ(std::set<Letter>(n.begin(), n.end()), (std::set<Letter>{U'ب', U'ت', U'ث', U'ح'}));
  EXPECT_FALSE(layout.adjacent(U'ث', U'ت'));
}

}  // namespace
}  // namespace sindhispell
