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

#include "sindhispell/trends.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "json.hpp"

namespace sindhispell {
namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

std::size_t total_length(const std::vector<GraphemeSeq>& span) {
  std::size_t n = 0;
  for (const GraphemeSeq& t : span) n += t.size();
  return n;
}

std::string lower_key(EditKind k) {
  switch (k) {
    case EditKind::kDeletion:
      return "deletion";
    case EditKind::kInsertion:
      return "insertion";
    case EditKind::kSubstitution:
      return "substitution";
    case EditKind::kTransposition:
      return "transposition";
  }
  return "?";
}

std::string lower_key(Category c) {
  switch (c) {
    case Category::kPhonetic:
      return "phonetic";
    case Category::kVisual:
      return "visual";
    case Category::kSpaceRelated:
      return "space_related";
    case Category::kTypographic:
      return "typographic";
  }
  return "?";
}

// Half-up rounded tenths of a percent.
std::uint64_t percent_tenths(std::uint64_t count, std::uint64_t denominator) {
  if (denominator == 0) return 0;
  return (2 * count * 1000 + denominator) / (2 * denominator);
}

struct Row {
  std::string metric;
  std::uint64_t count;
  std::uint64_t denominator;
};

// Fixed TSV/JSON row order.
std::vector<Row> rows_of(const TrendReport& r) {
  std::vector<Row> rows;
  rows.push_back({"total_errors", r.total_errors, r.total_errors});
  for (const EditKind k : kReportKinds) rows.push_back({lower_key(k), r.kind_count(k), r.total_errors});
  rows.push_back({"single_error_total", r.single_error_total, r.total_errors});
  rows.push_back({"multiple_error", r.multiple_error, r.total_errors});
  rows.push_back({"boundary_error", r.boundary_error, r.total_errors});
  rows.push_back({"short_word", r.short_word, r.total_errors});
  rows.push_back({"first_char", r.first_char, r.total_errors});
  rows.push_back({"real_word", r.real_word, r.total_errors});
  for (const Category c : {Category::kTypographic, Category::kPhonetic, Category::kVisual,
                           Category::kSpaceRelated}) {
    rows.push_back({"category." + lower_key(c), r.category_count(c), r.category_total()});
  }
  return rows;
}

json entry(std::uint64_t count, std::uint64_t denominator) {
  return json{{"count", count},
              {"percent", static_cast<double>(percent_tenths(count, denominator)) / 10.0},
              {"ratio", denominator == 0 ? 0.0
                                         : static_cast<double>(count) / static_cast<double>(denominator)}};
}

}  // namespace

std::string format_label(const ErrorLabel& label) {
  std::string out;
  for (const LabelledOp& op : label) {
    if (!out.empty()) out += '+';
    out += to_string(op.category);
    out += '/';
    out += to_string(op.kind);
    out += '@';
    out += std::to_string(op.position);
  }
  return out;
}

ErrorLabel parse_label(std::string_view text) {
  ErrorLabel label;
  for (const std::string_view part : split(text, '+')) {
    const auto slash = part.find('/');
    const auto at = part.find('@');
    if (slash == std::string_view::npos || at == std::string_view::npos || at < slash) {
      throw ParseError(0, "malformed label '" + std::string(text) + "'");
    }
    LabelledOp op;
    op.category = parse_category(part.substr(0, slash));
    op.kind = parse_edit_kind(part.substr(slash + 1, at - slash - 1));
    const std::string_view pos = part.substr(at + 1);
    const auto [end, ec] = std::from_chars(pos.data(), pos.data() + pos.size(), op.position);
    if (pos.empty() || ec != std::errc{} || end != pos.data() + pos.size()) {
      throw ParseError(0, "malformed label position '" + std::string(pos) + "'");
    }
    label.push_back(op);
  }
  return label;
}

ErrorLabel label_of(const ErrorClassification& c) {
  ErrorLabel label;
  for (std::size_t i = 0; i < c.edit_script.size(); ++i) {
    label.push_back({c.op_categories[i], c.edit_script[i].kind, c.edit_script[i].position});
  }
  return label;
}

std::string format_span(const std::vector<GraphemeSeq>& span) {
  std::string out;
  for (const GraphemeSeq& t : span) {
    if (!out.empty()) out += ' ';
    out += t.utf8();
  }
  return out;
}

std::vector<GraphemeSeq> parse_span(std::string_view column) {
  std::vector<GraphemeSeq> out;
  for (const std::string_view token : split(column, ' ')) {
    if (token.empty()) throw TextError("empty token in span '" + std::string(column) + "'");
    GraphemeSeq word = normalize(token);
    if (word.empty()) throw TextError("token normalizes to nothing");
    out.push_back(std::move(word));
  }
  return out;
}

std::optional<PairRecord> parse_pair_line(std::string_view line, std::size_t line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty() || line.front() == '#') return std::nullopt;
  const std::vector<std::string_view> fields = split(line, '\t');
  if (fields.size() < 2 || fields.size() > 3) {
    throw ParseError(line_no, "expected wrong<TAB>intended[<TAB>label]");
  }
  PairRecord record;
  record.line = line_no;
  try {
    record.wrong = parse_span(fields[0]);
    record.intended = parse_span(fields[1]);
    if (fields.size() == 3 && !fields[2].empty()) record.label = parse_label(fields[2]);
  } catch (const ParseError& e) {
    throw ParseError(line_no, e.what());
  } catch (const TextError& e) {
    throw ParseError(line_no, e.what());
  }
  return record;
}

std::vector<PairRecord> read_pair_corpus(std::istream& in) {
  std::vector<PairRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto record = parse_pair_line(line, line_no)) out.push_back(std::move(*record));
  }
  return out;
}

void write_pair_record(std::ostream& out, const PairRecord& record) {
  out << format_span(record.wrong) << '\t' << format_span(record.intended);
  if (record.label) out << '\t' << format_label(*record.label);
  out << '\n';
}

bool is_boundary_pair(const PairRecord& record) {
  return record.wrong.size() != 1 || record.intended.size() != 1;
}

ErrorClassification classify_record(const PairRecord& record, const Lexicon& lexicon,
                                    const ConfusionTable& tables, const KeyboardLayout& layout) {
  if (is_boundary_pair(record)) return classify_boundary(record.wrong, record.intended, lexicon);
  return classify_pair(record.wrong[0], record.intended[0], lexicon, tables, layout);
}

std::uint64_t TrendReport::category_total() const {
  return std::accumulate(category_counts.begin(), category_counts.end(), std::uint64_t{0});
}

double TrendReport::ratio(std::uint64_t count) const {
  return total_errors == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total_errors);
}

TrendReport& TrendReport::operator+=(const TrendReport& o) {
  total_errors += o.total_errors;
  for (std::size_t i = 0; i < 4; ++i) {
    kind_counts[i] += o.kind_counts[i];
    category_counts[i] += o.category_counts[i];
  }
  single_error_total += o.single_error_total;
  multiple_error += o.multiple_error;
  boundary_error += o.boundary_error;
  short_word += o.short_word;
  first_char += o.first_char;
  real_word += o.real_word;
  return *this;
}

std::string format_percent(std::uint64_t count, std::uint64_t denominator) {
  const std::uint64_t tenths = percent_tenths(count, denominator);
  return std::to_string(tenths / 10) + '.' + std::to_string(tenths % 10);
}

void accumulate(TrendReport& report, const ErrorLabel& label, std::size_t intended_length,
                bool real_word) {
  if (label.empty()) throw PreconditionError("empty label");
  ++report.total_errors;
  if (label.size() == 1) {
    ++report.single_error_total;
    ++report.kind_counts[static_cast<std::size_t>(label[0].kind)];
  } else {
    ++report.multiple_error;
  }
  const bool boundary = std::any_of(label.begin(), label.end(), [](const LabelledOp& op) {
    return op.category == Category::kSpaceRelated;
  });
  if (boundary) ++report.boundary_error;
  if (intended_length <= kShortWordMaxClusters) ++report.short_word;
  const bool first = !boundary && std::any_of(label.begin(), label.end(), [](const LabelledOp& op) {
    return op.position == 0;
  });
  if (first) ++report.first_char;
  if (real_word) ++report.real_word;
  for (const LabelledOp& op : label) ++report.category_counts[static_cast<std::size_t>(op.category)];
}

void accumulate(TrendReport& report, const ErrorClassification& c, std::size_t intended_length) {
  accumulate(report, label_of(c), intended_length, c.wordness == Wordness::kRealWord);
}

TrendReport analyze(const std::vector<PairRecord>& corpus, const Lexicon& lexicon,
                    const ConfusionTable& tables, const KeyboardLayout& layout,
                    LabelPolicy policy) {
  if (corpus.empty()) throw EmptyCorpusError();
  TrendReport report;
  for (const PairRecord& record : corpus) {
    const std::size_t length = total_length(record.intended);
    try {
      if (record.label && policy == LabelPolicy::kAccept) {
        const bool real = std::all_of(record.wrong.begin(), record.wrong.end(),
                                      [&](const GraphemeSeq& t) { return lexicon.contains(t); });
        accumulate(report, *record.label, length, real);
      } else {
        accumulate(report, classify_record(record, lexicon, tables, layout), length);
      }
    } catch (const PreconditionError& e) {
      throw PreconditionError("line " + std::to_string(record.line) + ": " + e.what());
    }
  }
  return report;
}

void render(const TrendReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kTsv) {
    out << "metric\tcount\tpercent\n";
    for (const Row& row : rows_of(report)) {
      out << row.metric << '\t' << row.count << '\t' << format_percent(row.count, row.denominator)
          << '\n';
    }
    return;
  }
  json kinds = json::object();
  for (const EditKind k : kReportKinds) kinds[lower_key(k)] = entry(report.kind_count(k), report.total_errors);
  json categories = json::object();
  for (const Category c : kAllCategories) {
    categories[lower_key(c)] = entry(report.category_count(c), report.category_total());
  }
  const json doc = {
      {"total_errors", report.total_errors},
      {"kinds", kinds},
      {"single_error_total", entry(report.single_error_total, report.total_errors)},
      {"multiple_error", entry(report.multiple_error, report.total_errors)},
      {"boundary_error", entry(report.boundary_error, report.total_errors)},
      {"short_word", entry(report.short_word, report.total_errors)},
      {"first_char", entry(report.first_char, report.total_errors)},
      {"real_word", entry(report.real_word, report.total_errors)},
      {"categories", categories},
  };
  out << doc.dump(2) << '\n';
}

TrendReport report_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    TrendReport r;
    r.total_errors = doc.at("total_errors").get<std::uint64_t>();
    for (const EditKind k : kReportKinds) {
      r.kind_counts[static_cast<std::size_t>(k)] =
          doc.at("kinds").at(lower_key(k)).at("count").get<std::uint64_t>();
    }
    r.single_error_total = doc.at("single_error_total").at("count").get<std::uint64_t>();
    r.multiple_error = doc.at("multiple_error").at("count").get<std::uint64_t>();
    r.boundary_error = doc.at("boundary_error").at("count").get<std::uint64_t>();
    r.short_word = doc.at("short_word").at("count").get<std::uint64_t>();
    r.first_char = doc.at("first_char").at("count").get<std::uint64_t>();
    r.real_word = doc.at("real_word").at("count").get<std::uint64_t>();
    for (const Category c : kAllCategories) {
      r.category_counts[static_cast<std::size_t>(c)] =
          doc.at("categories").at(lower_key(c)).at("count").get<std::uint64_t>();
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad trend report JSON: ") + e.what());
  }
}

}  // namespace sindhispell
