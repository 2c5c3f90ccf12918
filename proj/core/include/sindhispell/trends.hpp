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

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sindhispell/classifier.hpp"
#include "sindhispell/edit_model.hpp"
#include "sindhispell/error.hpp"
#include "sindhispell/grapheme.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"

namespace sindhispell {

// One labelled op: "<Category>/<Kind>@<position>".
struct LabelledOp {
  Category category = Category::kTypographic;
  EditKind kind = EditKind::kDeletion;
  std::size_t position = 0;
  friend bool operator==(const LabelledOp&, const LabelledOp&) = default;
};

// A pair label: one or more labelled ops joined by '+'.
using ErrorLabel = std::vector<LabelledOp>;

std::string format_label(const ErrorLabel& label);
ErrorLabel parse_label(std::string_view text);  // throws ParseError
ErrorLabel label_of(const ErrorClassification& c);

// One line of a pair corpus: wrong TAB intended [TAB label]. Columns with
// spaces are token spans (word-boundary pairs).
struct PairRecord {
  std::vector<GraphemeSeq> wrong;
  std::vector<GraphemeSeq> intended;
  std::optional<ErrorLabel> label;
  std::size_t line = 0;
};

std::string format_span(const std::vector<GraphemeSeq>& span);
// Splits on single spaces and normalizes each token. Throws TextError.
std::vector<GraphemeSeq> parse_span(std::string_view column);

// Parses a single corpus line (no trailing newline); nullopt for blank and
// '#' lines. Throws ParseError naming `line_no`.
std::optional<PairRecord> parse_pair_line(std::string_view line, std::size_t line_no);
std::vector<PairRecord> read_pair_corpus(std::istream& in);
void write_pair_record(std::ostream& out, const PairRecord& record);

// True when the record needs classify_boundary rather than classify_pair.
bool is_boundary_pair(const PairRecord& record);

// Classifies a record with whichever classifier fits its shape.
ErrorClassification classify_record(const PairRecord& record, const Lexicon& lexicon,
                                    const ConfusionTable& tables, const KeyboardLayout& layout);

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("empty corpus: no error pairs to analyze") {}
};

// Index order of the per-kind rows, as printed.
inline constexpr EditKind kReportKinds[] = {EditKind::kTransposition, EditKind::kInsertion,
                                            EditKind::kDeletion, EditKind::kSubstitution};

// Aggregate counts over a corpus of error pairs. Percentages are computed
// from the counts on demand; every per-pair percentage uses total_errors
// (multi-error pairs included) as denominator.
struct TrendReport {
  std::uint64_t total_errors = 0;
  std::array<std::uint64_t, 4> kind_counts{};  // indexed by EditKind
  std::uint64_t single_error_total = 0;
  std::uint64_t multiple_error = 0;
  std::uint64_t boundary_error = 0;
  std::uint64_t short_word = 0;
  std::uint64_t first_char = 0;
  std::uint64_t real_word = 0;
  // Per-op category counts (a multi-error pair adds one per op).
  std::array<std::uint64_t, 4> category_counts{};  // indexed by Category

  std::uint64_t kind_count(EditKind k) const { return kind_counts[static_cast<std::size_t>(k)]; }
  std::uint64_t category_count(Category c) const {
    return category_counts[static_cast<std::size_t>(c)];
  }
  std::uint64_t category_total() const;

  // count / total_errors as a fraction.
  double ratio(std::uint64_t count) const;
  TrendReport& operator+=(const TrendReport& other);
  friend bool operator==(const TrendReport&, const TrendReport&) = default;
};

// count/denominator*100 rounded half-up to one decimal, exact in integer
// arithmetic, e.g. format_percent(4, 155) == "2.6".
std::string format_percent(std::uint64_t count, std::uint64_t denominator);

enum class LabelPolicy { kAccept, kIgnore };

// Adds one classified pair.
void accumulate(TrendReport& report, const ErrorClassification& c, std::size_t intended_length);
void accumulate(TrendReport& report, const ErrorLabel& label, std::size_t intended_length,
                bool real_word);

// Throws EmptyCorpusError for an empty corpus and PreconditionError (with
// the record's line) when a pair cannot be classified.
TrendReport analyze(const std::vector<PairRecord>& corpus, const Lexicon& lexicon,
                    const ConfusionTable& tables, const KeyboardLayout& layout,
                    LabelPolicy policy = LabelPolicy::kAccept);

enum class ReportFormat { kTsv, kJson };

// TSV: header "metric\tcount\tpercent", then one row per metric in a fixed
// order (see docs/formats.md).
void render(const TrendReport& report, ReportFormat format, std::ostream& out);

// Inverse of the JSON rendering; throws ParseError.
TrendReport report_from_json(std::string_view json);

}  // namespace sindhispell
