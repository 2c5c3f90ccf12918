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

#include "sindhispell/suggester.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <map>

#include "sindhispell/boundary.hpp"
#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view value, std::size_t line_no) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || end != value.data() + value.size()) {
    throw ParseError(line_no, "malformed number '" + std::string(value) + "'");
  }
  return out;
}

EditOp space_op(EditKind kind, std::size_t position) {
  EditOp op{kind, position, {}, {}, true, 0};
  if (kind != EditKind::kInsertion) op.from = " ";
  if (kind != EditKind::kDeletion) op.to = " ";
  return op;
}

}  // namespace

double RankingConfig::base_weight(EditKind kind) const {
  switch (kind) {
    case EditKind::kDeletion:
      return deletion_weight;
    case EditKind::kInsertion:
      return insertion_weight;
    case EditKind::kSubstitution:
      return substitution_weight;
    case EditKind::kTransposition:
      return transposition_weight;
  }
  return 0.0;
}

RankingConfig RankingConfig::scaled(double factor) const {
  RankingConfig out = *this;
  for (double* w : {&out.deletion_weight, &out.substitution_weight, &out.insertion_weight,
                    &out.transposition_weight, &out.phonetic_multiplier, &out.visual_multiplier,
                    &out.keyboard_multiplier, &out.plain_multiplier}) {
    *w *= factor;
  }
  return out;
}

void RankingConfig::validate() const {
  for (const double w : {deletion_weight, substitution_weight, insertion_weight, transposition_weight}) {
    if (!(w > 0.0)) throw PreconditionError("edit weights must be positive");
  }
  for (const double m : {phonetic_multiplier, visual_multiplier, keyboard_multiplier, plain_multiplier}) {
    if (!(m > 0.0)) throw PreconditionError("multipliers must be positive");
  }
  if (!(frequency_exponent >= 0.0)) throw PreconditionError("frequency_exponent must be non-negative");
  if (!(distance_decay > 0.0)) throw PreconditionError("distance_decay must be positive");
  if (max_distance < 1 || max_distance > 2) throw PreconditionError("max_distance must be 1 or 2");
}

RankingConfig RankingConfig::load(std::istream& in) {
  RankingConfig config;
  const std::map<std::string_view, double*> reals = {
      {"weight.deletion", &config.deletion_weight},
      {"weight.substitution", &config.substitution_weight},
      {"weight.insertion", &config.insertion_weight},
      {"weight.transposition", &config.transposition_weight},
      {"multiplier.phonetic", &config.phonetic_multiplier},
      {"multiplier.visual", &config.visual_multiplier},
      {"multiplier.keyboard", &config.keyboard_multiplier},
      {"multiplier.plain", &config.plain_multiplier},
      {"frequency_exponent", &config.frequency_exponent},
      {"distance_decay", &config.distance_decay},
  };
  const std::map<std::string_view, std::size_t*> counts = {
      {"max_distance", &config.max_distance},
      {"max_suggestions", &config.max_suggestions},
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    if (const auto it = reals.find(key); it != reals.end()) {
      *it->second = parse_number<double>(value, line_no);
    } else if (const auto ct = counts.find(key); ct != counts.end()) {
      *ct->second = parse_number<std::size_t>(value, line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  try {
    config.validate();
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  return config;
}

std::string_view to_string(SuggestionSource source) {
  return source == SuggestionSource::kEditModel ? "edit" : "boundary";
}

std::string Suggestion::text() const {
  std::string out;
  for (const GraphemeSeq& w : words) {
    if (!out.empty()) out += ' ';
    out += w.utf8();
  }
  return out;
}

std::vector<TokenSpan> tokenize(std::string_view text) {
  std::vector<TokenSpan> out;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  std::optional<std::size_t> start;
  for (int32_t i = 0; i < length;) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    const bool separator = c >= 0 && (is_whitespace(static_cast<Letter>(c)) ||
                                      is_punctuation(static_cast<Letter>(c)));
    if (separator) {
      if (start) out.push_back({*start, static_cast<std::size_t>(at) - *start});
      start.reset();
    } else if (!start) {
      start = static_cast<std::size_t>(at);
    }
  }
  if (start) out.push_back({*start, text.size() - *start});
  return out;
}

Speller::Speller(const Lexicon& lexicon, const ConfusionTable& tables,
                 const KeyboardLayout& layout, RankingConfig config)
    : lexicon_(lexicon), tables_(tables), layout_(layout), config_(config) {
  config_.validate();
}

double Speller::op_weight(const EditOp& op) const {
  double multiplier = config_.plain_multiplier;
  if (!op.boundary && op.kind == EditKind::kSubstitution) {
    const CueSet cues = op_cues(op, tables_, layout_);
    if (cues.has(Category::kPhonetic)) multiplier = std::max(multiplier, config_.phonetic_multiplier);
    if (cues.has(Category::kVisual)) multiplier = std::max(multiplier, config_.visual_multiplier);
    const Letter from = decode_utf8(op.from).front();
    const Letter to = decode_utf8(op.to).front();
    if (layout_.adjacent(from, to)) multiplier = std::max(multiplier, config_.keyboard_multiplier);
  }
  return config_.base_weight(op.kind) * multiplier;
}

double Speller::score(const EditScript& script, std::uint64_t frequency) const {
  double product = 1.0;
  for (const EditOp& op : script) product *= op_weight(op);
  double weight = product;
  if (script.size() == 2) {
    weight = std::sqrt(product) * config_.distance_decay;
  } else if (script.size() > 2) {
    const auto edits = static_cast<double>(script.size());
    weight = std::pow(product, 1.0 / edits) * std::pow(config_.distance_decay, edits - 1.0);
  }
  return weight * std::pow(static_cast<double>(frequency) + 1.0, config_.frequency_exponent);
}

void Speller::finish(std::vector<Suggestion>& suggestions) const {
  std::sort(suggestions.begin(), suggestions.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.text() < b.text();
  });
  // Runs of near-equal scores are ordered by text alone.
  auto run = suggestions.begin();
  while (run != suggestions.end()) {
    auto end = std::next(run);
    while (end != suggestions.end() &&
           std::prev(end)->score - end->score <= kScoreTieTolerance * std::prev(end)->score) {
      ++end;
    }
    std::sort(run, end, [](const Suggestion& a, const Suggestion& b) { return a.text() < b.text(); });
    run = end;
  }
  if (suggestions.size() > config_.max_suggestions) suggestions.resize(config_.max_suggestions);
}

std::vector<Suggestion> Speller::suggest(const GraphemeSeq& token) const {
  std::vector<Suggestion> out;
  if (token.empty() || lexicon_.contains(token)) return out;

  for (Candidate& c : generate_candidates(token, lexicon_, config_.max_distance)) {
    const Lexicon::Entry& entry = lexicon_.entry(c.lexicon_id);
    const double s = score(c.script, entry.frequency);
    out.push_back({{entry.word}, s, std::move(c.script), SuggestionSource::kEditModel});
  }
  for (Split& split : repair_runon(token, lexicon_)) {
    const std::uint64_t f =
        std::min(lexicon_.frequency(split.left), lexicon_.frequency(split.right));
    EditScript script{space_op(EditKind::kDeletion, split.left.size())};
    const double s = score(script, f);
    out.push_back({{std::move(split.left), std::move(split.right)}, s, std::move(script),
                   SuggestionSource::kBoundary});
  }
  finish(out);
  return out;
}

std::vector<Suggestion> Speller::respacings(const GraphemeSeq& left,
                                            const GraphemeSeq& right) const {
  std::vector<Suggestion> out;
  for (Respacing& r : repair_space_shift(left, right, lexicon_)) {
    EditScript script;
    std::uint64_t f;
    if (r.size() == 1) {
      script.push_back(space_op(EditKind::kInsertion, left.size()));
      f = lexicon_.frequency(r[0]);
    } else {
      EditOp shift = space_op(EditKind::kTransposition, r[0].size());
      shift.moved_to = left.size();
      script.push_back(shift);
      f = std::min(lexicon_.frequency(r[0]), lexicon_.frequency(r[1]));
    }
    const double s = score(script, f);
    out.push_back({std::move(r), s, std::move(script), SuggestionSource::kBoundary});
  }
  finish(out);
  return out;
}

std::vector<Flag> Speller::check_text(std::string_view text) const {
  struct Token {
    TokenSpan span;
    std::optional<GraphemeSeq> word;
    bool valid = false;
  };
  std::vector<Token> tokens;
  std::vector<Flag> flags;
  for (const TokenSpan& span : tokenize(text)) {
    const std::string_view raw = text.substr(span.offset, span.length);
    Token token{span, std::nullopt, false};
    try {
      token.word = normalize(raw);
    } catch (const TextError& e) {
      flags.push_back({span.offset, span.length, std::string(raw), {}, e.what()});
      tokens.push_back(std::move(token));
      continue;
    }
    const std::u32string scalars = decode_utf8(token.word->utf8());
    const bool numeric = std::all_of(scalars.begin(), scalars.end(),
                                     [](char32_t c) { return u_isdigit(static_cast<UChar32>(c)); });
    token.valid = token.word->empty() || numeric || lexicon_.contains(*token.word);
    if (!token.valid) {
      flags.push_back({span.offset, span.length, std::string(raw), suggest(*token.word), {}});
    }
    tokens.push_back(std::move(token));
  }

  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    const Token& a = tokens[k];
    const Token& b = tokens[k + 1];
    if (!a.word || !b.word || a.word->empty() || b.word->empty()) continue;
    if (a.valid && b.valid) continue;
    const std::size_t gap_begin = a.span.offset + a.span.length;
    const std::string_view gap = text.substr(gap_begin, b.span.offset - gap_begin);
    const std::u32string gap_scalars = decode_utf8(gap);
    if (!std::all_of(gap_scalars.begin(), gap_scalars.end(), is_whitespace)) continue;
    std::vector<Suggestion> repairs = respacings(*a.word, *b.word);
    if (repairs.empty()) continue;
    const std::size_t end = b.span.offset + b.span.length;
    flags.push_back({a.span.offset, end - a.span.offset,
                     std::string(text.substr(a.span.offset, end - a.span.offset)),
                     std::move(repairs), {}});
  }

  std::stable_sort(flags.begin(), flags.end(), [](const Flag& x, const Flag& y) {
    return x.offset != y.offset ? x.offset < y.offset : x.length < y.length;
  });
  return flags;
}

}  // namespace sindhispell
