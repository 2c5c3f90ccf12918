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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "sindhispell/edit_model.hpp"
#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"

namespace sindhispell {

enum class Multiplicity { kSingle, kMultiple };
enum class LengthClass { kShort, kLong };
enum class PositionClass { kFirstChar, kNthChar };
enum class Locus { kWithinWord, kWordBoundary };
enum class Wordness { kNonWord, kRealWord };

// Declared in precedence order: when several cues fire, the lowest
// enumerator wins.
enum class Category { kPhonetic, kVisual, kSpaceRelated, kTypographic };

inline constexpr Category kAllCategories[] = {Category::kPhonetic, Category::kVisual,
                                              Category::kSpaceRelated, Category::kTypographic};

std::string_view to_string(Multiplicity v);
std::string_view to_string(LengthClass v);
std::string_view to_string(PositionClass v);
std::string_view to_string(Locus v);
std::string_view to_string(Wordness v);
std::string_view to_string(Category v);
Category parse_category(std::string_view name);  // throws ParseError

// Set of category cues, one bit per Category.
class CueSet {
 public:
  void add(Category c) { bits_ |= bit(c); }
  void merge(CueSet other) { bits_ |= other.bits_; }
  bool has(Category c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  // Highest-precedence member. Requires !empty().
  Category top() const;
  std::vector<Category> members() const;
  friend bool operator==(CueSet, CueSet) = default;

 private:
  static std::uint8_t bit(Category c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }
  std::uint8_t bits_ = 0;
};

// Words of at most this many clusters are short.
inline constexpr std::size_t kShortWordMaxClusters = 4;

struct ErrorClassification {
  EditScript edit_script;
  Multiplicity multiplicity = Multiplicity::kSingle;
  LengthClass word_length_class = LengthClass::kLong;
  PositionClass position_class = PositionClass::kNthChar;
  Locus locus = Locus::kWithinWord;
  Wordness wordness = Wordness::kNonWord;
  Category category = Category::kTypographic;
  CueSet cue_labels;
  // Category of each op in edit_script (precedence max of its cues).
  std::vector<Category> op_categories;
};

// Cues fired by a single within-word op.
CueSet op_cues(const EditOp& op, const ConfusionTable& tables, const KeyboardLayout& layout);

// Throws PreconditionError if wrong == intended or intended is not a
// lexicon word.
ErrorClassification classify_pair(const GraphemeSeq& wrong, const GraphemeSeq& intended,
                                  const Lexicon& lexicon, const ConfusionTable& tables,
                                  const KeyboardLayout& layout);

// Spans must concatenate to the same clusters and differ in spacing.
// Fewer wrong tokens is a run-on (space Deletion), more is an incorrect
// split (space Insertion), and one space moved is a Transposition.
ErrorClassification classify_boundary(std::span<const GraphemeSeq> wrong_span,
                                      std::span<const GraphemeSeq> intended_span,
                                      const Lexicon& lexicon);

}  // namespace sindhispell
