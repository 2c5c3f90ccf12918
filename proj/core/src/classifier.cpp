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

#include <algorithm>
#include <set>

#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

Letter first_scalar(std::string_view cluster) {
  const std::u32string scalars = decode_utf8(cluster);
  return scalars.empty() ? Letter{0} : scalars.front();
}

GraphemeSeq join(std::span<const GraphemeSeq> span) {
  GraphemeSeq out;
  for (const GraphemeSeq& token : span) {
    if (token.empty()) throw PreconditionError("span contains an empty token");
    out = out.concat(token);
  }
  return out;
}

std::set<std::size_t> space_positions(std::span<const GraphemeSeq> span) {
  std::set<std::size_t> out;
  std::size_t at = 0;
  for (std::size_t k = 0; k + 1 < span.size(); ++k) {
    at += span[k].size();
    out.insert(at);
  }
  return out;
}

}  // namespace

std::string_view to_string(Multiplicity v) {
  return v == Multiplicity::kSingle ? "Single" : "Multiple";
}
std::string_view to_string(LengthClass v) { return v == LengthClass::kShort ? "Short" : "Long"; }
std::string_view to_string(PositionClass v) {
  return v == PositionClass::kFirstChar ? "FirstChar" : "NthChar";
}
std::string_view to_string(Locus v) {
  return v == Locus::kWithinWord ? "WithinWord" : "WordBoundary";
}
std::string_view to_string(Wordness v) { return v == Wordness::kNonWord ? "NonWord" : "RealWord"; }
std::string_view to_string(Category v) {
  switch (v) {
    case Category::kPhonetic:
      return "Phonetic";
    case Category::kVisual:
      return "Visual";
    case Category::kSpaceRelated:
      return "SpaceRelated";
    case Category::kTypographic:
      return "Typographic";
  }
  return "?";
}

Category parse_category(std::string_view name) {
  for (const Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  throw ParseError(0, "unknown category '" + std::string(name) + "'");
}

Category CueSet::top() const {
  for (const Category c : kAllCategories) {
    if (has(c)) return c;
  }
  throw PreconditionError("empty cue set has no top category");
}

std::vector<Category> CueSet::members() const {
  std::vector<Category> out;
  for (const Category c : kAllCategories) {
    if (has(c)) out.push_back(c);
  }
  return out;
}

CueSet op_cues(const EditOp& op, const ConfusionTable& tables, const KeyboardLayout& layout) {
  CueSet cues;
  if (op.boundary) {
    cues.add(Category::kSpaceRelated);
    return cues;
  }
  if (op.kind != EditKind::kSubstitution) {
    cues.add(Category::kTypographic);
    return cues;
  }
  const Letter from = first_scalar(op.from);
  const Letter to = first_scalar(op.to);
  const auto code_from = tables.phonetic_group(from);
  if (code_from && code_from == tables.phonetic_group(to)) cues.add(Category::kPhonetic);
  if (tables.visually_similar(from, to)) cues.add(Category::kVisual);
  if (layout.adjacent(from, to) || cues.empty()) cues.add(Category::kTypographic);
  return cues;
}

ErrorClassification classify_pair(const GraphemeSeq& wrong, const GraphemeSeq& intended,
                                  const Lexicon& lexicon, const ConfusionTable& tables,
                                  const KeyboardLayout& layout) {
  if (wrong == intended) throw PreconditionError("wrong and intended words are equal");
  if (!lexicon.contains(intended)) {
    throw PreconditionError("intended word '" + intended.utf8() + "' is not in the lexicon");
  }
  ErrorClassification out;
  out.edit_script = diagnose(wrong, intended);
  out.multiplicity = out.edit_script.size() == 1 ? Multiplicity::kSingle : Multiplicity::kMultiple;
  out.word_length_class =
      intended.size() <= kShortWordMaxClusters ? LengthClass::kShort : LengthClass::kLong;
  const bool touches_first = std::any_of(out.edit_script.begin(), out.edit_script.end(),
                                         [](const EditOp& op) { return op.position == 0; });
  out.position_class = touches_first ? PositionClass::kFirstChar : PositionClass::kNthChar;
  out.locus = Locus::kWithinWord;
  out.wordness = lexicon.contains(wrong) ? Wordness::kRealWord : Wordness::kNonWord;
  for (const EditOp& op : out.edit_script) {
    const CueSet cues = op_cues(op, tables, layout);
    out.op_categories.push_back(cues.top());
    out.cue_labels.merge(cues);
  }
  out.category = out.cue_labels.top();
  return out;
}

ErrorClassification classify_boundary(std::span<const GraphemeSeq> wrong_span,
                                      std::span<const GraphemeSeq> intended_span,
                                      const Lexicon& lexicon) {
  const GraphemeSeq wrong_text = join(wrong_span);
  const GraphemeSeq intended_text = join(intended_span);
  if (wrong_text != intended_text || wrong_span.empty()) {
    throw PreconditionError("spans differ beyond spacing");
  }
  const auto wrong_spaces = space_positions(wrong_span);
  const auto intended_spaces = space_positions(intended_span);
  std::vector<std::size_t> removed, added;
  std::set_difference(intended_spaces.begin(), intended_spaces.end(), wrong_spaces.begin(),
                      wrong_spaces.end(), std::back_inserter(removed));
  std::set_difference(wrong_spaces.begin(), wrong_spaces.end(), intended_spaces.begin(),
                      intended_spaces.end(), std::back_inserter(added));
  if (removed.empty() && added.empty()) throw PreconditionError("spans are identical");

  ErrorClassification out;
  if (removed.size() == 1 && added.size() == 1) {
    EditOp shift{EditKind::kTransposition, removed[0], " ", " ", true, added[0]};
    out.edit_script.push_back(shift);
  } else {
    for (const std::size_t p : removed) {
      out.edit_script.push_back({EditKind::kDeletion, p, " ", {}, true, 0});
    }
    for (const std::size_t p : added) {
      out.edit_script.push_back({EditKind::kInsertion, p, {}, " ", true, 0});
    }
    std::stable_sort(out.edit_script.begin(), out.edit_script.end(),
                     [](const EditOp& a, const EditOp& b) { return a.position < b.position; });
  }
  out.multiplicity = out.edit_script.size() == 1 ? Multiplicity::kSingle : Multiplicity::kMultiple;
  out.word_length_class =
      intended_text.size() <= kShortWordMaxClusters ? LengthClass::kShort : LengthClass::kLong;
  out.position_class = PositionClass::kNthChar;
  out.locus = Locus::kWordBoundary;
  const bool all_words = std::all_of(wrong_span.begin(), wrong_span.end(),
                                     [&](const GraphemeSeq& t) { return lexicon.contains(t); });
  out.wordness = all_words ? Wordness::kRealWord : Wordness::kNonWord;
  out.cue_labels.add(Category::kSpaceRelated);
  out.op_categories.assign(out.edit_script.size(), Category::kSpaceRelated);
  out.category = Category::kSpaceRelated;
  return out;
}

}  // namespace sindhispell
