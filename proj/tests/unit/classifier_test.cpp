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

#include "sindhispell/classifier.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

const ConfusionTable& tables() { return ConfusionTable::builtin(); }
const KeyboardLayout& layout() { return KeyboardLayout::builtin(); }

Lexicon words(std::initializer_list<const char*> list) {
  std::vector<GraphemeSeq> seqs;
  for (const char* w : list) seqs.push_back(normalize(w));
  return Lexicon::from_words(seqs);
}

ErrorClassification classify(const char* wrong, const char* intended, const Lexicon& lex) {
  return classify_pair(normalize(wrong), normalize(intended), lex, tables(), layout());
}

std::vector<GraphemeSeq> span(std::initializer_list<const char*> list) {
  std::vector<GraphemeSeq> out;
  for (const char* w : list) out.push_back(normalize(w));
  return out;
}

CueSet cues_of(const char* from, const char* to) {
  return op_cues({EditKind::kSubstitution, 0, from, to}, tables(), layout());
}

TEST(CueSetTest, TopFollowsPrecedence) {
  CueSet cues;
  EXPECT_TRUE(cues.empty());
  EXPECT_THROW(cues.top(), PreconditionError);
  cues.add(Category::kTypographic);
  cues.add(Category::kVisual);
  EXPECT_EQ(cues.top(), Category::kVisual);
  cues.add(Category::kPhonetic);
  EXPECT_EQ(cues.top(), Category::kPhonetic);
  EXPECT_EQ(cues.members(),
            (std::vector<Category>{Category::kPhonetic, Category::kVisual, Category::kTypographic}));
}

TEST(CategoryTest, NamesRoundTrip) {
  for (Category c : kAllCategories) EXPECT_EQ(parse_category(to_string(c)), c);
  EXPECT_THROW(parse_category("Semantic"), ParseError);
}

TEST(OpCuesTest, SubstitutionCues) {
  // Same phonetic group only.
  EXPECT_EQ(cues_of("ت", "ط").members(), std::vector<Category>{Category::kPhonetic});
  // Same skeleton only.
  EXPECT_EQ(cues_of("ب", "پ").members(), std::vector<Category>{Category::kVisual});
  // Neighbouring keys only.
  EXPECT_EQ(cues_of("ق", "و").members(), std::vector<Category>{Category::kTypographic});
  // No confusion relation at all.
  EXPECT_EQ(cues_of("ط", "ڀ").members(), std::vector<Category>{Category::kTypographic});
  // Phonetic, visual and adjacent at once.
  EXPECT_EQ(cues_of("ت", "ٿ").members(),
            (std::vector<Category>{Category::kPhonetic, Category::kVisual,
                                   Category::kTypographic}));
}

TEST(OpCuesTest, NonSubstitutionAndBoundaryOps) {
  EXPECT_EQ(op_cues({EditKind::kDeletion, 0, "ب", ""}, tables(), layout()).members(),
            std::vector<Category>{Category::kTypographic});
  EditOp space{EditKind::kDeletion, 2, " ", "", true, 0};
  EXPECT_EQ(op_cues(space, tables(), layout()).members(),
            std::vector<Category>{Category::kSpaceRelated});
}

TEST(ClassifyPairTest, LetterOmission) {
  const Lexicon lex = words({"پاڪستان", "جامشورو"});
  const auto c = classify("پاڪتان", "پاڪستان", lex);
  ASSERT_EQ(c.edit_script.size(), 1u);
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kDeletion);
  EXPECT_EQ(c.edit_script[0].position, 3u);
  EXPECT_EQ(c.multiplicity, Multiplicity::kSingle);
  EXPECT_EQ(c.position_class, PositionClass::kNthChar);
  EXPECT_EQ(c.locus, Locus::kWithinWord);
  EXPECT_EQ(c.wordness, Wordness::kNonWord);
  EXPECT_EQ(c.word_length_class, LengthClass::kLong);
  EXPECT_EQ(c.category, Category::kTypographic);
}

TEST(ClassifyPairTest, HomophoneSubstitutionIsPhonetic) {
  const auto c = classify("طاريڪ", "تاريڪ", words({"تاريڪ"}));
  EXPECT_EQ(c.category, Category::kPhonetic);
  EXPECT_EQ(c.position_class, PositionClass::kFirstChar);
  EXPECT_EQ(c.word_length_class, LengthClass::kLong);
}

TEST(ClassifyPairTest, RealWordError) {
  const auto c = classify("جي", "جو", words({"جو", "جي"}));
  EXPECT_EQ(c.wordness, Wordness::kRealWord);
  EXPECT_EQ(c.word_length_class, LengthClass::kShort);
}

TEST(ClassifyPairTest, FirstCharacterDeletion) {
  const auto c = classify("فاظت", "حفاظت", words({"حفاظت"}));
  EXPECT_EQ(c.position_class, PositionClass::kFirstChar);
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kDeletion);
}

TEST(ClassifyPairTest, ShortWordBoundary) {
  const Lexicon lex = words({"ابتث", "ابتثج"});
  EXPECT_EQ(classify("ابث", "ابتث", lex).word_length_class, LengthClass::kShort);
  EXPECT_EQ(classify("ابتج", "ابتثج", lex).word_length_class, LengthClass::kLong);
}

TEST(ClassifyPairTest, MultipleErrors) {
  const auto c = classify("فاطت", "حفاظت", words({"حفاظت"}));
  EXPECT_EQ(c.multiplicity, Multiplicity::kMultiple);
  ASSERT_EQ(c.edit_script.size(), 2u);
  EXPECT_EQ(c.op_categories.size(), 2u);
  // ظ and ط share a skeleton but not a sound group.
  EXPECT_EQ(c.op_categories[0], Category::kTypographic);
  EXPECT_EQ(c.op_categories[1], Category::kVisual);
  EXPECT_EQ(c.category, Category::kVisual);
  EXPECT_TRUE(c.cue_labels.has(Category::kTypographic));
}

TEST(ClassifyPairTest, Preconditions) {
  const Lexicon lex = words({"جو"});
  EXPECT_THROW(classify("جو", "جو", lex), PreconditionError);
  EXPECT_THROW(classify("جي", "جا", lex), PreconditionError);
}

TEST(ClassifyPairTest, ScriptAgreesWithDiagnoseAndIgnoresFrequencies) {
  const auto vocab = testing::synthetic_words(80, 13, 2, 7);
  std::vector<Lexicon::Entry> a, b;
  std::mt19937_64 gen(2);
  for (const auto& w : vocab) {
    a.push_back({w, 0});
    b.push_back({w, gen() % 1000});
  }
  const Lexicon la = Lexicon::from_entries(a);
  const Lexicon lb = Lexicon::from_entries(b);
  for (std::size_t i = 0; i + 1 < vocab.size(); ++i) {
    const auto& wrong = vocab[i];
    const auto& intended = vocab[i + 1];
    const auto ca = classify_pair(wrong, intended, la, tables(), layout());
    const auto cb = classify_pair(wrong, intended, lb, tables(), layout());
    EXPECT_EQ(ca.edit_script, diagnose(wrong, intended));
    EXPECT_EQ(ca.multiplicity,
              ca.edit_script.size() == 1 ? Multiplicity::kSingle : Multiplicity::kMultiple);
    EXPECT_EQ(ca.edit_script, cb.edit_script);
    EXPECT_EQ(ca.category, cb.category);
    EXPECT_EQ(ca.cue_labels, cb.cue_labels);
    EXPECT_EQ(ca.wordness, cb.wordness);
  }
}

TEST(ClassifyBoundaryTest, RunOn) {
  const Lexicon lex = words({"يونيورسٽي", "جو"});
  const auto c = classify_boundary(span({"يونيورسٽيجو"}), span({"يونيورسٽي", "جو"}), lex);
  EXPECT_EQ(c.category, Category::kSpaceRelated);
  EXPECT_EQ(c.locus, Locus::kWordBoundary);
  ASSERT_EQ(c.edit_script.size(), 1u);
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kDeletion);
  EXPECT_EQ(c.edit_script[0].position, 9u);
  EXPECT_TRUE(c.edit_script[0].boundary);
  EXPECT_EQ(c.wordness, Wordness::kNonWord);
}

TEST(ClassifyBoundaryTest, IncorrectSplit) {
  const auto c = classify_boundary(span({"ج", "امشورو"}), span({"جامشورو"}), words({"جامشورو"}));
  EXPECT_EQ(c.category, Category::kSpaceRelated);
  ASSERT_EQ(c.edit_script.size(), 1u);
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kInsertion);
  EXPECT_EQ(c.edit_script[0].position, 1u);
}

TEST(ClassifyBoundaryTest, Zindagi) {
  const auto c = classify_boundary(span({"زن", "دگي"}), span({"زندگي"}), words({"زندگي"}));
  EXPECT_EQ(c.category, Category::kSpaceRelated);
  EXPECT_TRUE(c.cue_labels.has(Category::kSpaceRelated));
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kInsertion);
}

TEST(ClassifyBoundaryTest, MovedSpaceIsATransposition) {
  const auto c = classify_boundary(span({"ا", "بج"}), span({"اب", "ج"}), words({"اب", "ج"}));
  ASSERT_EQ(c.edit_script.size(), 1u);
  EXPECT_EQ(c.edit_script[0].kind, EditKind::kTransposition);
  EXPECT_EQ(c.edit_script[0].position, 2u);
  EXPECT_EQ(c.edit_script[0].moved_to, 1u);
  EXPECT_EQ(c.multiplicity, Multiplicity::kSingle);
}

TEST(ClassifyBoundaryTest, RejectsSpansThatDifferInLetters) {
  const Lexicon lex = words({"جو"});
  EXPECT_THROW(classify_boundary(span({"ج", "ي"}), span({"جو"}), lex), PreconditionError);
  EXPECT_THROW(classify_boundary(span({"جو"}), span({"جو"}), lex), PreconditionError);
}

}  // namespace
}  // namespace sindhispell
