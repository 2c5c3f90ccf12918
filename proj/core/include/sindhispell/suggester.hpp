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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sindhispell/classifier.hpp"
#include "sindhispell/edit_model.hpp"
#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"

namespace sindhispell {

// Scoring knobs. Base weights follow the observed frequency order of the
// four edit kinds (deletion, substitution > insertion > transposition);
// the numbers themselves are tunable.
struct RankingConfig {
  double deletion_weight = 1.0;
  double substitution_weight = 1.0;
  double insertion_weight = 0.9;
  double transposition_weight = 0.9;

  double phonetic_multiplier = 2.0;
  double visual_multiplier = 1.7;
  double keyboard_multiplier = 1.4;
  double plain_multiplier = 1.0;

  double frequency_exponent = 0.5;
  // Applied once per edit beyond the first.
  double distance_decay = 0.1;

  std::size_t max_distance = 1;
  std::size_t max_suggestions = 10;

  double base_weight(EditKind kind) const;
  // Every weight and multiplier times `factor`.
  RankingConfig scaled(double factor) const;
  // Throws PreconditionError when a weight, multiplier or the decay is not
  // positive, the exponent is negative, or max_distance is not 1 or 2.
  void validate() const;

  // Flat key=value lines; '#' comments. Unknown keys are errors.
  // Keys: weight.{deletion,substitution,insertion,transposition},
  // multiplier.{phonetic,visual,keyboard,plain}, frequency_exponent,
  // distance_decay, max_distance, max_suggestions.
  static RankingConfig load(std::istream& in);
};

enum class SuggestionSource { kEditModel, kBoundary };
std::string_view to_string(SuggestionSource source);

struct Suggestion {
  // One word, or two for a re-spaced span.
  std::vector<GraphemeSeq> words;
  double score = 0.0;
  EditScript script;
  SuggestionSource source = SuggestionSource::kEditModel;

  // Words joined by a single space.
  std::string text() const;
};

// A flagged span of checked text.
struct Flag {
  std::size_t offset = 0;  // bytes
  std::size_t length = 0;  // bytes
  std::string token;       // raw bytes of the span
  std::vector<Suggestion> suggestions;
  std::optional<std::string> error;  // set when the token is not valid text
};

// Ranks corrections against a lexicon. Holds references; the lexicon,
// tables and layout must outlive it. Safe to share across threads.
inline constexpr double kScoreTieTolerance = 1e-9;

class Speller {
 public:
  Speller(const Lexicon& lexicon, const ConfusionTable& tables, const KeyboardLayout& layout,
          RankingConfig config = {});

  // Empty when `token` is a lexicon word. Otherwise edit-model candidates
  // within config().max_distance plus run-on splits, scored as
  //   geomean(op weights) * decay^(edits - 1) * (freq + 1)^exponent
  // and sorted by descending score, then codepoint order of text(). Scores
  // within a relative kScoreTieTolerance of their neighbour count as tied,
  // so that rounding does not decide the order of equal scores.
  std::vector<Suggestion> suggest(const GraphemeSeq& token) const;

  // Splits on whitespace and punctuation, flags every token that is not a
  // lexicon word, and flags whitespace-separated token pairs that a merge
  // or a moved space turns into words. Flags are ordered by offset then
  // length.
  std::vector<Flag> check_text(std::string_view text) const;

  // Weight of one op: base(kind) times its strongest cue multiplier.
  double op_weight(const EditOp& op) const;

  const RankingConfig& config() const noexcept { return config_; }

 private:
  double score(const EditScript& script, std::uint64_t frequency) const;
  std::vector<Suggestion> respacings(const GraphemeSeq& left, const GraphemeSeq& right) const;
  void finish(std::vector<Suggestion>& suggestions) const;

  const Lexicon& lexicon_;
  const ConfusionTable& tables_;
  const KeyboardLayout& layout_;
  RankingConfig config_;
};

// Token spans of `text`: maximal runs of bytes that are neither whitespace
// nor punctuation. Ill-formed UTF-8 bytes stay inside tokens.
struct TokenSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};
std::vector<TokenSpan> tokenize(std::string_view text);

}  // namespace sindhispell
