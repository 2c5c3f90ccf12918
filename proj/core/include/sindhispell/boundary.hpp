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

#include <optional>
#include <utility>
#include <vector>

#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"

namespace sindhispell {

struct Split {
  GraphemeSeq left;
  GraphemeSeq right;
  friend bool operator==(const Split&, const Split&) = default;
};

// Run-on repair: every split of `token` into two lexicon words, ordered by
// descending min(freq(left), freq(right)) and then leftmost split point.
std::vector<Split> repair_runon(const GraphemeSeq& token, const Lexicon& lexicon);

// Incorrect-split repair: the concatenation if it is a lexicon word.
// Throws PreconditionError if either side is empty.
std::optional<GraphemeSeq> repair_split(const GraphemeSeq& left, const GraphemeSeq& right,
                                        const Lexicon& lexicon);

// A re-spacing of a two-token span: one part for a merge, two for a moved
// space.
using Respacing = std::vector<GraphemeSeq>;

// Space-shift repair: the merge (if a word) first, then every other space
// position in the span where both parts are words, left to right. The
// original placement is never returned.
std::vector<Respacing> repair_space_shift(const GraphemeSeq& left, const GraphemeSeq& right,
                                          const Lexicon& lexicon);

}  // namespace sindhispell
