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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"

namespace sindhispell {

// Declaration order is the tie-break order used by diagnose().
enum class EditKind { kDeletion, kInsertion, kSubstitution, kTransposition };

std::string_view to_string(EditKind kind);
EditKind parse_edit_kind(std::string_view name);  // throws ParseError

// One Damerau transformation turning the intended word into the wrong one.
//
// `position` is a cluster index in the intended word. Insertion puts `to`
// before cluster `position` (position == size() appends). Deletion removes
// `from`. Substitution replaces `from` by `to`. Transposition swaps
// clusters position and position + 1 (`from`, `to` hold them in intended
// order).
//
// Word-boundary ops use a single space as the inserted or deleted cluster;
// a space shift is a Transposition whose `moved_to` is the new space
// position.
struct EditOp {
  EditKind kind = EditKind::kDeletion;
  std::size_t position = 0;
  std::string from;
  std::string to;
  bool boundary = false;
  std::size_t moved_to = 0;

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

using EditScript = std::vector<EditOp>;

std::string describe(const EditOp& op);

// Throws PreconditionError for an out-of-range position, an identity
// substitution or a transposition of two equal clusters.
GraphemeSeq apply(const GraphemeSeq& word, const EditOp& op);

// Applies ops in order; each position refers to the original word.
GraphemeSeq apply_script(const GraphemeSeq& word, const EditScript& script);

struct SingleEdits {
  // Distinct variants at distance exactly 1, each with the first op (in
  // position-major, kind order) that produces it.
  std::vector<std::pair<GraphemeSeq, EditOp>> variants;
  // Enumerated ops before deduplication: (n+1)A + n + n(A-1) + (n-1) when
  // every cluster of the word is an alphabet letter.
  std::size_t raw_count = 0;
};

SingleEdits single_edits(const GraphemeSeq& word, const Alphabet& alphabet);

// Restricted Damerau (optimal string alignment) distance over clusters.
std::size_t damerau_distance(const GraphemeSeq& a, const GraphemeSeq& b);

// True iff damerau_distance(a, b) <= bound; stops early on long words.
bool within_distance(const GraphemeSeq& a, const GraphemeSeq& b, std::size_t bound);

// Minimal script turning `intended` into `wrong`. Among minimal scripts the
// one whose ops sit leftmost is chosen, ties broken by EditKind order.
EditScript diagnose(const GraphemeSeq& wrong, const GraphemeSeq& intended);

struct Candidate {
  std::size_t lexicon_id = 0;
  EditScript script;  // diagnose(nonword, word)
};

// Every lexicon word within `max_distance` (1 or 2) of `nonword`, in
// lexicon order, with its diagnosis. Words equal to `nonword` are skipped.
std::vector<Candidate> generate_candidates(const GraphemeSeq& nonword, const Lexicon& lexicon,
                                           std::size_t max_distance = 1);

}  // namespace sindhispell
