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
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sindhispell/rng.hpp"
#include "sindhispell/script.hpp"
#include "sindhispell/trends.hpp"

namespace sindhispell {

enum class InjectKind {
  kInsertion,
  kDeletion,
  kSubstitution,
  kTransposition,
  kPhonetic,        // substitution inside a phonetic group
  kVisual,          // substitution inside a visual group
  kTypographic,     // substitution by a keyboard neighbour
  kSpaceInsertion,  // incorrect split
  kSpaceOmission,   // run-on of two words
  kMultiple,        // two edits, distance exactly 2
};

inline constexpr InjectKind kAllInjectKinds[] = {
    InjectKind::kInsertion,   InjectKind::kDeletion,       InjectKind::kSubstitution,
    InjectKind::kTransposition, InjectKind::kPhonetic,     InjectKind::kVisual,
    InjectKind::kTypographic, InjectKind::kSpaceInsertion, InjectKind::kSpaceOmission,
    InjectKind::kMultiple};

std::string_view to_string(InjectKind kind);
InjectKind parse_inject_kind(std::string_view name);  // throws ParseError

// Attempts made before an unsatisfiable request is reported.
inline constexpr int kMaxResample = 16;

class InjectionError : public Error {
 public:
  using Error::Error;
};

struct Injection {
  PairRecord pair;  // label always set
  InjectKind kind = InjectKind::kDeletion;
  // True when a classifier cannot be expected to recover the injected op
  // exactly: an equivalent op exists at an earlier position (repeated
  // letters) or a substitution fires more than one category cue.
  bool ambiguous = false;
};

// Shared inputs of the generator.
struct InjectionContext {
  const ConfusionTable& tables;
  const KeyboardLayout& layout;
};

// One error of exactly `kind` in `word`. A given `position` pins the
// cluster index; otherwise positions are drawn from `rng`, retrying up to
// kMaxResample times for kinds that need a confusable letter. Throws
// InjectionError when the word is too short or no letter qualifies.
// kSpaceOmission needs two words; use inject_runon.
Injection inject(const GraphemeSeq& word, InjectKind kind, SplitMix64& rng,
                 const InjectionContext& ctx, std::optional<std::size_t> position = std::nullopt);

Injection inject_runon(const GraphemeSeq& left, const GraphemeSeq& right);

// Shares of each kind; must sum to 1 within 1e-9.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::vector<std::pair<InjectKind, double>> shares);

  // "gpo" or "web7": the four single-edit kinds plus multi-edit pairs in
  // the proportions of the GPO and Web7 typing studies (exact ratios of
  // their counts).
  static Distribution preset(std::string_view name);
  // key=value lines, keys as in to_string(InjectKind).
  static Distribution load(std::istream& in);

  const std::vector<std::pair<InjectKind, double>>& shares() const noexcept { return shares_; }
  InjectKind sample(SplitMix64& rng) const;

 private:
  std::vector<std::pair<InjectKind, double>> shares_;
};

// `count` labelled pairs drawn from `words`. Reproducible per seed. For
// each pair the kind is drawn first, then words until one admits the kind
// (up to kMaxResample draws).
std::vector<Injection> inject_corpus(std::span<const GraphemeSeq> words,
                                     const Distribution& distribution, std::uint64_t seed,
                                     std::size_t count, const InjectionContext& ctx);

}  // namespace sindhispell
