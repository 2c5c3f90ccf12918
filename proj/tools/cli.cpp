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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sindhispell/boundary.hpp"
#include "sindhispell/classifier.hpp"
#include "sindhispell/error.hpp"
#include "sindhispell/injector.hpp"
#include "sindhispell/lexicon.hpp"
#include "sindhispell/script.hpp"
#include "sindhispell/suggester.hpp"
#include "sindhispell/trends.hpp"

namespace sindhispell::cli {
namespace {

using nlohmann::json;

// Usage or I/O problems that end the run with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string format_score(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", score);
  return buf;
}

json script_json(const EditScript& script) {
  json ops = json::array();
  for (const EditOp& op : script) {
    json j = {{"kind", to_string(op.kind)}, {"position", op.position}, {"boundary", op.boundary}};
    if (!op.from.empty()) j["from"] = op.from;
    if (!op.to.empty()) j["to"] = op.to;
    if (op.boundary && op.kind == EditKind::kTransposition) j["moved_to"] = op.moved_to;
    ops.push_back(std::move(j));
  }
  return ops;
}

// Data-file flags shared by the subcommands.
struct DataOptions {
  std::string lexicon;
  std::string phonetic;
  std::string visual;
  std::string layout;
  std::string config;

  void attach(CLI::App& cmd, bool lexicon_required) {
    auto* opt = cmd.add_option("--lexicon", lexicon, "Word list (word[TAB frequency] per line)");
    if (lexicon_required) opt->required();
    cmd.add_option("--phonetic", phonetic, "Phonetic confusion groups file");
    cmd.add_option("--visual", visual, "Visual confusion groups file");
    cmd.add_option("--layout", layout, "Keyboard layout grid file");
  }
};

struct Resources {
  std::optional<Lexicon> lexicon;
  std::unique_ptr<ConfusionTable> tables;
  std::unique_ptr<KeyboardLayout> layout;
  RankingConfig config;

  const ConfusionTable& confusion() const { return tables ? *tables : ConfusionTable::builtin(); }
  const KeyboardLayout& keys() const { return layout ? *layout : KeyboardLayout::builtin(); }
};

Resources load_resources(const DataOptions& opts) {
  Resources r;
  try {
    if (!opts.lexicon.empty()) {
      std::ifstream in = open(opts.lexicon);
      r.lexicon = Lexicon::load(in);
    }
    if (!opts.phonetic.empty() || !opts.visual.empty()) {
      std::optional<std::ifstream> visual;
      if (!opts.visual.empty()) visual = open(opts.visual);
      if (opts.phonetic.empty()) {
        std::istringstream builtin;
        // Reuse the built-in phonetic groups with a custom visual file.
        std::ostringstream text;
        for (const LetterGroup& g : ConfusionTable::builtin().phonetic_groups()) {
          for (std::size_t i = 0; i < g.size(); ++i) text << (i ? " " : "") << to_utf8(g[i]);
          text << '\n';
        }
        builtin.str(text.str());
        r.tables = std::make_unique<ConfusionTable>(
            ConfusionTable::load(builtin, visual ? &*visual : nullptr, opts.visual));
      } else {
        std::ifstream phonetic = open(opts.phonetic);
        r.tables = std::make_unique<ConfusionTable>(
            ConfusionTable::load(phonetic, visual ? &*visual : nullptr, opts.phonetic));
      }
    }
    if (!opts.layout.empty()) {
      std::ifstream in = open(opts.layout);
      r.layout = std::make_unique<KeyboardLayout>(KeyboardLayout::load(in));
    }
    if (!opts.config.empty()) {
      std::ifstream in = open(opts.config);
      r.config = RankingConfig::load(in);
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  return r;
}

// Lexicon of the intended words of a corpus, used when none is given.
Lexicon corpus_lexicon(const std::vector<PairRecord>& corpus) {
  std::vector<GraphemeSeq> words;
  for (const PairRecord& r : corpus) words.insert(words.end(), r.intended.begin(), r.intended.end());
  return Lexicon::from_words(words);
}

int cmd_check(const DataOptions& opts, const std::string& format, std::optional<std::size_t> max_suggestions,
              std::optional<std::size_t> max_distance, std::istream& in, std::ostream& out) {
  Resources r = load_resources(opts);
  if (max_suggestions) r.config.max_suggestions = *max_suggestions;
  if (max_distance) r.config.max_distance = *max_distance;
  try {
    r.config.validate();
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const Speller speller(*r.lexicon, r.confusion(), r.keys(), r.config);
  const std::string text = read_all(in);
  const std::vector<Flag> flags = speller.check_text(text);

  if (format == "json") {
    json records = json::array();
    for (const Flag& f : flags) {
      json suggestions = json::array();
      for (const Suggestion& s : f.suggestions) {
        suggestions.push_back({{"word", s.text()},
                               {"score", s.score},
                               {"source", to_string(s.source)},
                               {"script", script_json(s.script)}});
      }
      json record = {{"offset", f.offset},
                     {"length", f.length},
                     {"token", f.token},
                     {"suggestions", suggestions}};
      if (f.error) record["error"] = *f.error;
      records.push_back(std::move(record));
    }
    out << json{{"flags", records}}.dump(2, ' ', false, json::error_handler_t::replace) << '\n';
  } else {
    for (const Flag& f : flags) {
      out << f.offset << '\t' << f.token << '\t';
      if (f.error) {
        out << "invalid: " << *f.error << '\t';
      } else {
        out << "misspelled\t";
      }
      for (std::size_t i = 0; i < f.suggestions.size(); ++i) {
        out << (i ? "|" : "") << f.suggestions[i].text() << ':' << format_score(f.suggestions[i].score);
      }
      out << '\n';
    }
  }
  return flags.empty() ? kExitClean : kExitFindings;
}

int cmd_suggest(const DataOptions& opts, std::vector<std::string> words, std::istream& in,
                std::ostream& out, std::ostream& err) {
  const Resources r = load_resources(opts);
  const Speller speller(*r.lexicon, r.confusion(), r.keys(), r.config);
  if (words.empty()) {
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream tokens(line);
      std::string t;
      while (tokens >> t) words.push_back(t);
    }
  }
  int status = kExitClean;
  for (const std::string& w : words) {
    try {
      const GraphemeSeq token = normalize(w);
      out << token.utf8() << '\t';
      const auto suggestions = speller.suggest(token);
      for (std::size_t i = 0; i < suggestions.size(); ++i) {
        out << (i ? "|" : "") << suggestions[i].text() << ':' << format_score(suggestions[i].score);
      }
      out << '\n';
      if (!r.lexicon->contains(token)) status = kExitFindings;
    } catch (const TextError& e) {
      err << "'" << w << "': " << e.what() << '\n';
      status = kExitFindings;
    }
  }
  return status;
}

int cmd_classify(const DataOptions& opts, const std::string& format, std::istream& in,
                 std::ostream& out) {
  const Resources r = load_resources(opts);
  struct Line {
    std::size_t number;
    std::string raw;
    std::optional<PairRecord> record;
    std::string error;
  };
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    Line line{number, text, std::nullopt, {}};
    try {
      line.record = parse_pair_line(text, number);
      if (!line.record) continue;
    } catch (const ParseError& e) {
      line.error = e.what();
    }
    lines.push_back(std::move(line));
  }
  std::vector<PairRecord> records;
  for (const Line& l : lines) {
    if (l.record) records.push_back(*l.record);
  }
  const Lexicon lexicon = r.lexicon ? *r.lexicon : corpus_lexicon(records);

  int status = kExitClean;
  json array = json::array();
  for (Line& l : lines) {
    std::optional<ErrorClassification> c;
    if (l.record) {
      try {
        c = classify_record(*l.record, lexicon, r.confusion(), r.keys());
      } catch (const PreconditionError& e) {
        l.error = e.what();
      }
    }
    const std::string wrong = l.record ? format_span(l.record->wrong) : "";
    const std::string intended = l.record ? format_span(l.record->intended) : "";
    if (!c) status = kExitFindings;
    if (format == "json") {
      json j = {{"line", l.number}, {"wrong", wrong}, {"intended", intended}};
      if (!c) {
        j["error"] = l.error;
      } else {
        std::vector<std::string> cues;
        for (const Category cat : c->cue_labels.members()) cues.emplace_back(to_string(cat));
        j["script"] = script_json(c->edit_script);
        j["label"] = format_label(label_of(*c));
        j["multiplicity"] = to_string(c->multiplicity);
        j["length_class"] = to_string(c->word_length_class);
        j["position_class"] = to_string(c->position_class);
        j["locus"] = to_string(c->locus);
        j["wordness"] = to_string(c->wordness);
        j["category"] = to_string(c->category);
        j["cues"] = cues;
      }
      array.push_back(std::move(j));
      continue;
    }
    out << l.number << '\t' << wrong << '\t' << intended << '\t';
    if (!c) {
      out << "error: " << l.error << "\t\t\t\t\t\t\t\t\n";
      continue;
    }
    std::string cues;
    for (const Category cat : c->cue_labels.members()) {
      cues += (cues.empty() ? "" : ",") + std::string(to_string(cat));
    }
    out << "ok\t" << format_label(label_of(*c)) << '\t' << to_string(c->multiplicity) << '\t'
        << to_string(c->word_length_class) << '\t' << to_string(c->position_class) << '\t'
        << to_string(c->locus) << '\t' << to_string(c->wordness) << '\t' << to_string(c->category)
        << '\t' << cues << '\n';
  }
  if (format == "json") out << array.dump(2) << '\n';
  return status;
}

int cmd_analyze(const DataOptions& opts, const std::vector<std::string>& files,
                const std::string& format, bool ignore_labels, std::istream& in, std::ostream& out) {
  const Resources r = load_resources(opts);
  std::vector<PairRecord> corpus;
  try {
    if (files.empty()) {
      corpus = read_pair_corpus(in);
    } else {
      for (const std::string& path : files) {
        std::ifstream f = open(path);
        auto part = read_pair_corpus(f);
        corpus.insert(corpus.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
      }
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const Lexicon lexicon = r.lexicon ? *r.lexicon : corpus_lexicon(corpus);
  try {
    const TrendReport report =
        analyze(corpus, lexicon, r.confusion(), r.keys(),
                ignore_labels ? LabelPolicy::kIgnore : LabelPolicy::kAccept);
    render(report, format == "json" ? ReportFormat::kJson : ReportFormat::kTsv, out);
  } catch (const EmptyCorpusError& e) {
    throw UsageError(e.what());
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return kExitClean;
}

int cmd_inject(const DataOptions& opts, const std::string& distribution, std::uint64_t seed,
               std::size_t count, std::ostream& out) {
  const Resources r = load_resources(opts);
  Distribution dist;
  try {
    if (distribution == "gpo" || distribution == "web7") {
      dist = Distribution::preset(distribution);
    } else {
      std::ifstream f = open(distribution);
      dist = Distribution::load(f);
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  std::vector<GraphemeSeq> words;
  for (const Lexicon::Entry& e : r.lexicon->entries()) words.push_back(e.word);
  const InjectionContext ctx{r.confusion(), r.keys()};
  try {
    for (const Injection& inj : inject_corpus(words, dist, seed, count, ctx)) {
      write_pair_record(out, inj.pair);
    }
  } catch (const InjectionError& e) {
    throw UsageError(e.what());
  }
  return kExitClean;
}

int cmd_normalize(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kExitClean;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string t;
    while (tokens >> t) {
      try {
        const GraphemeSeq seq = normalize(t);
        out << seq.utf8() << '\t' << seq.size() << '\t';
        for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
        out << '\n';
      } catch (const TextError& e) {
        err << "'" << t << "': " << e.what() << '\n';
        status = kExitFindings;
      }
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sindhi spell checker and spelling-error analysis toolkit", "sindhispell"};
  app.require_subcommand(0, 1);
  bool normalize_only = false;
  app.add_flag("--normalize-only", normalize_only,
               "Print the normalized form, cluster count and clusters of each stdin token");

  DataOptions check_opts, suggest_opts, classify_opts, analyze_opts, inject_opts, dump_opts;
  std::string check_format = "tsv", classify_format = "tsv", analyze_format = "tsv";
  std::optional<std::size_t> max_suggestions, max_distance;
  std::vector<std::string> suggest_words, analyze_files;
  bool ignore_labels = false;
  std::string distribution = "gpo";
  std::uint64_t seed = 1;
  std::size_t count = 1000;

  auto* check = app.add_subcommand("check", "Flag misspelled tokens of stdin text");
  check_opts.attach(*check, true);
  check->add_option("--config", check_opts.config, "Ranking config (key=value)");
  check->add_option("--format", check_format)->check(CLI::IsMember({"tsv", "json"}));
  check->add_option("--max-suggestions", max_suggestions);
  check->add_option("--max-distance", max_distance)->check(CLI::Range(1, 2));

  auto* suggest = app.add_subcommand("suggest", "Rank corrections for words");
  suggest_opts.attach(*suggest, true);
  suggest->add_option("--config", suggest_opts.config, "Ranking config (key=value)");
  suggest->add_option("words", suggest_words, "Words (default: stdin tokens)");

  auto* classify = app.add_subcommand("classify", "Classify wrong<TAB>intended pairs from stdin");
  classify_opts.attach(*classify, false);
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"tsv", "json"}));

  auto* analyze_cmd = app.add_subcommand("analyze", "Aggregate a pair corpus into a trend report");
  analyze_opts.attach(*analyze_cmd, false);
  analyze_cmd->add_option("--format", analyze_format)->check(CLI::IsMember({"tsv", "json"}));
  analyze_cmd->add_flag("--ignore-labels", ignore_labels, "Reclassify labelled pairs");
  analyze_cmd->add_option("files", analyze_files, "Corpus files (default: stdin)");

  auto* inject_cmd = app.add_subcommand("inject", "Generate a labelled synthetic error corpus");
  inject_opts.attach(*inject_cmd, true);
  inject_cmd->add_option("--distribution", distribution, "Preset (gpo, web7) or key=value file");
  inject_cmd->add_option("--seed", seed);
  inject_cmd->add_option("--count", count);

  auto* dump = app.add_subcommand("dump", "Print the normalized lexicon sorted by codepoint");
  dump->add_option("--lexicon", dump_opts.lexicon)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "sindhispell: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (normalize_only) return cmd_normalize(in, out, err);
    if (*check) return cmd_check(check_opts, check_format, max_suggestions, max_distance, in, out);
    if (*suggest) return cmd_suggest(suggest_opts, suggest_words, in, out, err);
    if (*classify) return cmd_classify(classify_opts, classify_format, in, out);
    if (*analyze_cmd) return cmd_analyze(analyze_opts, analyze_files, analyze_format, ignore_labels, in, out);
    if (*inject_cmd) return cmd_inject(inject_opts, distribution, seed, count, out);
    if (*dump) {
      const Resources r = load_resources(dump_opts);
      r.lexicon->dump(out);
      return kExitClean;
    }
    err << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "sindhispell: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "sindhispell: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sindhispell::cli
