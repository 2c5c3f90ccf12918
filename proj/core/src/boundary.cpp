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

#include "sindhispell/boundary.hpp"

#include <algorithm>

#include "sindhispell/error.hpp"

namespace sindhispell {

std::vector<Split> repair_runon(const GraphemeSeq& token, const Lexicon& lexicon) {
  struct Ranked {
    Split split;
    std::uint64_t weight;
  };
  std::vector<Ranked> found;
  for (std::size_t i = 1; i < token.size(); ++i) {
    GraphemeSeq left = token.slice(0, i);
    if (!lexicon.contains(left)) continue;
    GraphemeSeq right = token.slice(i, token.size());
    if (!lexicon.contains(right)) continue;
    // Add-one smoothing does not change the order of min(freq).
    const std::uint64_t weight = std::min(lexicon.frequency(left), lexicon.frequency(right));
    found.push_back({{std::move(left), std::move(right)}, weight});
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Ranked& a, const Ranked& b) { return a.weight > b.weight; });
  std::vector<Split> out;
  out.reserve(found.size());
  for (Ranked& r : found) out.push_back(std::move(r.split));
  return out;
}

std::optional<GraphemeSeq> repair_split(const GraphemeSeq& left, const GraphemeSeq& right,
                                        const Lexicon& lexicon) {
  if (left.empty() || right.empty()) throw PreconditionError("repair_split needs two nonempty tokens");
  GraphemeSeq merged = left.concat(right);
  if (!lexicon.contains(merged)) return std::nullopt;
  return merged;
}

std::vector<Respacing> repair_space_shift(const GraphemeSeq& left, const GraphemeSeq& right,
                                          const Lexicon& lexicon) {
  if (left.empty() || right.empty()) {
    throw PreconditionError("repair_space_shift needs two nonempty tokens");
  }
  const GraphemeSeq joined = left.concat(right);
  std::vector<Respacing> out;
  if (lexicon.contains(joined)) out.push_back({joined});
  for (std::size_t i = 1; i < joined.size(); ++i) {
    if (i == left.size()) continue;
    GraphemeSeq a = joined.slice(0, i);
    if (!lexicon.contains(a)) continue;
    GraphemeSeq b = joined.slice(i, joined.size());
    if (lexicon.contains(b)) out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

}  // namespace sindhispell
