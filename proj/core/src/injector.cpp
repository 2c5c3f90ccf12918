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

#include "sindhispell/injector.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "sindhispell/classifier.hpp"
#include "sindhispell/edit_model.hpp"

namespace sindhispell {
namespace {

constexpr std::string_view kKindNames[] = {
    "insertion", "deletion",        "substitution",   "transposition", "phonetic",
    "visual",    "typographic", "space_insertion", "space_omission", "multiple"};

std::vector<Letter> partners(InjectKind kind, Letter c, const InjectionContext& ctx) {
  std::vector<Letter> out;
  switch (kind) {
    case InjectKind::kPhonetic: {
      const auto code = ctx.tables.phonetic_group(c);
      if (!code) break;
      for (const Letter other : ctx.tables.phonetic_groups()[static_cast<std::size_t>(*code - 1)]) {
        if (other != c) out.push_back(other);
      }
      break;
    }
    case InjectKind::kVisual:
      for (const Letter other : ctx.tables.alphabet().letters()) {
        if (other != c && ctx.tables.visually_similar(c, other)) out.push_back(other);
      }
      break;
    case InjectKind::kTypographic:
      out = ctx.layout.neighbours(c);
      break;
    default:
      break;
  }
  return out;
}

Category category_for(InjectKind kind) {
  switch (kind) {
    case InjectKind::kPhonetic:
      return Category::kPhonetic;
    case InjectKind::kVisual:
      return Category::kVisual;
    default:
      return Category::kTypographic;
  }
}

Injection single_word(const GraphemeSeq& word, const GraphemeSeq& wrong, const EditOp& op,
                      InjectKind kind, Category category, bool ambiguous) {
  Injection out;
  out.kind = kind;
  out.ambiguous = ambiguous;
  out.pair.wrong = {wrong};
  out.pair.intended = {word};
  out.pair.label = ErrorLabel{{category, op.kind, op.position}};
  return out;
}

std::size_t pick_position(std::optional<std::size_t> forced, std::size_t bound, SplitMix64& rng) {
  if (forced) {
    if (*forced >= bound) throw InjectionError("position out of range for this kind");
    return *forced;
  }
  return static_cast<std::size_t>(rng.below(bound));
}

Letter random_letter(const Alphabet& alphabet, SplitMix64& rng) {
  if (alphabet.size() == 0) throw InjectionError("empty alphabet");
  return alphabet.letters()[rng.below(alphabet.size())];
}

Injection inject_edit(const GraphemeSeq& word, InjectKind kind, SplitMix64& rng,
                      const InjectionContext& ctx, std::optional<std::size_t> position) {
  const std::size_t n = word.size();
  switch (kind) {
    case InjectKind::kInsertion: {
      const std::size_t p = pick_position(position, n + 1, rng);
      const std::string letter = to_utf8(random_letter(ctx.tables.alphabet(), rng));
      const EditOp op{EditKind::kInsertion, p, {}, letter};
      const bool ambiguous = p > 0 && word[p - 1] == letter;
      return single_word(word, apply(word, op), op, kind, Category::kTypographic, ambiguous);
    }
    case InjectKind::kDeletion: {
      if (n < 2) throw InjectionError("deletion needs at least two clusters");
      const std::size_t p = pick_position(position, n, rng);
      const EditOp op{EditKind::kDeletion, p, std::string(word[p]), {}};
      const bool ambiguous = p > 0 && word[p - 1] == word[p];
      return single_word(word, apply(word, op), op, kind, Category::kTypographic, ambiguous);
    }
    case InjectKind::kTransposition: {
      if (n < 2) throw InjectionError("transposition needs at least two clusters");
      for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        const std::size_t p = pick_position(position, n - 1, rng);
        if (word[p] == word[p + 1]) {
          if (position) break;
          continue;
        }
        const EditOp op{EditKind::kTransposition, p, std::string(word[p]), std::string(word[p + 1])};
        return single_word(word, apply(word, op), op, kind, Category::kTypographic, false);
      }
      throw InjectionError("no transposable pair of distinct clusters found");
    }
    case InjectKind::kSubstitution: {
      if (n == 0) throw InjectionError("substitution needs a nonempty word");
      if (ctx.tables.alphabet().size() < 2) throw InjectionError("alphabet too small");
      const std::size_t p = pick_position(position, n, rng);
      std::string letter;
      do {
        letter = to_utf8(random_letter(ctx.tables.alphabet(), rng));
      } while (letter == word[p]);
      const EditOp op{EditKind::kSubstitution, p, std::string(word[p]), letter};
      const CueSet cues = op_cues(op, ctx.tables, ctx.layout);
      return single_word(word, apply(word, op), op, kind, cues.top(), cues.members().size() > 1);
    }
    case InjectKind::kPhonetic:
    case InjectKind::kVisual:
    case InjectKind::kTypographic: {
      if (n == 0) throw InjectionError("substitution needs a nonempty word");
      for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        const std::size_t p = pick_position(position, n, rng);
        const std::vector<Letter> options = partners(kind, word.base(p), ctx);
        if (options.empty()) {
          if (position) break;
          continue;
        }
        const std::string letter = to_utf8(options[rng.below(options.size())]);
        if (letter == word[p]) continue;
        const EditOp op{EditKind::kSubstitution, p, std::string(word[p]), letter};
        const CueSet cues = op_cues(op, ctx.tables, ctx.layout);
        return single_word(word, apply(word, op), op, kind, category_for(kind),
                           cues.members().size() > 1);
      }
      throw InjectionError("no letter of the word has a " + std::string(to_string(kind)) +
                           " partner");
    }
    default:
      throw InjectionError("not a single-word edit kind");
  }
}

Injection inject_multiple(const GraphemeSeq& word, SplitMix64& rng, const InjectionContext& ctx) {
  constexpr InjectKind kEdits[] = {InjectKind::kInsertion, InjectKind::kDeletion,
                                   InjectKind::kSubstitution, InjectKind::kTransposition};
  for (int attempt = 0; attempt < kMaxResample; ++attempt) {
    try {
      const Injection first = inject_edit(word, kEdits[rng.below(4)], rng, ctx, std::nullopt);
      const Injection second =
          inject_edit(first.pair.wrong[0], kEdits[rng.below(4)], rng, ctx, std::nullopt);
      const GraphemeSeq& wrong = second.pair.wrong[0];
      if (damerau_distance(wrong, word) != 2) continue;
      Injection out;
      out.kind = InjectKind::kMultiple;
      out.ambiguous = true;
      out.pair.wrong = {wrong};
      out.pair.intended = {word};
      ErrorLabel label;
      for (const EditOp& op : diagnose(wrong, word)) {
        label.push_back({op_cues(op, ctx.tables, ctx.layout).top(), op.kind, op.position});
      }
      out.pair.label = std::move(label);
      return out;
    } catch (const InjectionError&) {
      continue;
    }
  }
  throw InjectionError("could not place two independent edits");
}

}  // namespace

std::string_view to_string(InjectKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

InjectKind parse_inject_kind(std::string_view name) {
  for (const InjectKind k : kAllInjectKinds) {
    if (to_string(k) == name) return k;
  }
  throw ParseError(0, "unknown error kind '" + std::string(name) + "'");
}

Injection inject(const GraphemeSeq& word, InjectKind kind, SplitMix64& rng,
                 const InjectionContext& ctx, std::optional<std::size_t> position) {
  switch (kind) {
    case InjectKind::kSpaceInsertion: {
      if (word.size() < 2) throw InjectionError("a split needs at least two clusters");
      std::size_t p;
      if (position) {
        if (*position == 0 || *position >= word.size()) throw InjectionError("split position out of range");
        p = *position;
      } else {
        p = 1 + static_cast<std::size_t>(rng.below(word.size() - 1));
      }
      Injection out;
      out.kind = kind;
      out.pair.wrong = {word.slice(0, p), word.slice(p, word.size())};
      out.pair.intended = {word};
      out.pair.label = ErrorLabel{{Category::kSpaceRelated, EditKind::kInsertion, p}};
      return out;
    }
    case InjectKind::kSpaceOmission:
      throw InjectionError("a run-on needs two words; use inject_runon");
    case InjectKind::kMultiple:
      if (position) throw InjectionError("multiple-edit injection takes no position");
      return inject_multiple(word, rng, ctx);
    default:
      return inject_edit(word, kind, rng, ctx, position);
  }
}

Injection inject_runon(const GraphemeSeq& left, const GraphemeSeq& right) {
  if (left.empty() || right.empty()) throw InjectionError("a run-on needs two nonempty words");
  Injection out;
  out.kind = InjectKind::kSpaceOmission;
  out.pair.wrong = {left.concat(right)};
  out.pair.intended = {left, right};
  out.pair.label = ErrorLabel{{Category::kSpaceRelated, EditKind::kDeletion, left.size()}};
  return out;
}

Distribution::Distribution(std::vector<std::pair<InjectKind, double>> shares)
    : shares_(std::move(shares)) {
  double sum = 0.0;
  for (std::size_t i = 0; i < shares_.size(); ++i) {
    if (!(shares_[i].second >= 0.0)) throw ParseError(0, "shares must be non-negative");
    for (std::size_t j = 0; j < i; ++j) {
      if (shares_[j].first == shares_[i].first) {
        throw ParseError(0, "kind '" + std::string(to_string(shares_[i].first)) + "' listed twice");
      }
    }
    sum += shares_[i].second;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ParseError(0, "distribution sums to " + std::to_string(sum) + ", expected 1");
  }
}

Distribution Distribution::preset(std::string_view name) {
  auto counts = [](double t, double i, double d, double s, double m, double total) {
    return Distribution({{InjectKind::kTransposition, t / total},
                         {InjectKind::kInsertion, i / total},
                         {InjectKind::kDeletion, d / total},
                         {InjectKind::kSubstitution, s / total},
                         {InjectKind::kMultiple, m / total}});
  };
  if (name == "gpo") return counts(4, 29, 49, 62, 11, 155);
  if (name == "web7") return counts(47, 73, 124, 97, 19, 360);
  throw ParseError(0, "unknown distribution preset '" + std::string(name) + "'");
}

Distribution Distribution::load(std::istream& in) {
  std::vector<std::pair<InjectKind, double>> shares;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected kind=share");
    double share = 0.0;
    const char* begin = line.data() + eq + 1;
    const char* end = line.data() + line.size();
    const auto [stop, ec] = std::from_chars(begin, end, share);
    if (begin == end || ec != std::errc{} || stop != end) {
      throw ParseError(line_no, "malformed share '" + line.substr(eq + 1) + "'");
    }
    try {
      shares.emplace_back(parse_inject_kind(line.substr(0, eq)), share);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return Distribution(std::move(shares));
}

InjectKind Distribution::sample(SplitMix64& rng) const {
  if (shares_.empty()) throw InjectionError("empty distribution");
  const double u = rng.uniform();
  double cumulative = 0.0;
  for (const auto& [kind, share] : shares_) {
    cumulative += share;
    if (u < cumulative) return kind;
  }
  for (auto it = shares_.rbegin(); it != shares_.rend(); ++it) {
    if (it->second > 0.0) return it->first;
  }
  return shares_.back().first;
}

std::vector<Injection> inject_corpus(std::span<const GraphemeSeq> words,
                                     const Distribution& distribution, std::uint64_t seed,
                                     std::size_t count, const InjectionContext& ctx) {
  std::vector<Injection> out;
  if (count == 0) return out;
  if (words.empty()) throw InjectionError("no words to corrupt");
  SplitMix64 rng(seed);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const InjectKind kind = distribution.sample(rng);
    bool placed = false;
    for (int attempt = 0; attempt < kMaxResample && !placed; ++attempt) {
      const GraphemeSeq& word = words[rng.below(words.size())];
      try {
        if (kind == InjectKind::kSpaceOmission) {
          out.push_back(inject_runon(word, words[rng.below(words.size())]));
        } else {
          out.push_back(inject(word, kind, rng, ctx));
        }
        placed = true;
      } catch (const InjectionError&) {
      }
    }
    if (!placed) {
      throw InjectionError("kind '" + std::string(to_string(kind)) + "' could not be placed after " +
                           std::to_string(kMaxResample) + " word draws");
    }
  }
  return out;
}

}  // namespace sindhispell
