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

#include "sindhispell/edit_model.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

using Clusters = std::vector<std::string_view>;

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max() / 4;

// Suffix table: cost[i][j] = OSA distance between intended[i:] and wrong[j:].
class SuffixTable {
 public:
  SuffixTable(const Clusters& intended, const Clusters& wrong)
      : n_(intended.size()), m_(wrong.size()), cells_((n_ + 1) * (m_ + 1), kInfinity) {
    for (std::size_t i = n_ + 1; i-- > 0;) {
      for (std::size_t j = m_ + 1; j-- > 0;) {
        std::size_t best;
        if (i == n_) {
          best = m_ - j;
        } else if (j == m_) {
          best = n_ - i;
        } else {
          best = std::min(at(i + 1, j), at(i, j + 1)) + 1;
          best = std::min(best, at(i + 1, j + 1) + (intended[i] == wrong[j] ? 0 : 1));
          if (i + 1 < n_ && j + 1 < m_ && intended[i] == wrong[j + 1] &&
              intended[i + 1] == wrong[j] && intended[i] != intended[i + 1]) {
            best = std::min(best, at(i + 2, j + 2) + 1);
          }
        }
        at(i, j) = best;
      }
    }
  }

  std::size_t at(std::size_t i, std::size_t j) const { return cells_[i * (m_ + 1) + j]; }

 private:
  std::size_t& at(std::size_t i, std::size_t j) { return cells_[i * (m_ + 1) + j]; }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> cells_;
};

std::size_t osa(const Clusters& a, const Clusters& b, std::size_t bound) {
  const std::size_t n = a.size(), m = b.size();
  if ((n > m ? n - m : m - n) > bound) return bound + 1;
  // Three rolling rows of the prefix table.
  std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t best = std::min(prev[j], cur[j - 1]) + 1;
      best = std::min(best, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1));
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] &&
          a[i - 1] != a[i - 2]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
      row_min = std::min(row_min, best);
    }
    if (row_min > bound) return bound + 1;
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kDeletion:
      return "Deletion";
    case EditKind::kInsertion:
      return "Insertion";
    case EditKind::kSubstitution:
      return "Substitution";
    case EditKind::kTransposition:
      return "Transposition";
  }
  return "?";
}

EditKind parse_edit_kind(std::string_view name) {
  for (const EditKind k : {EditKind::kDeletion, EditKind::kInsertion, EditKind::kSubstitution,
                           EditKind::kTransposition}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError(0, "unknown edit kind '" + std::string(name) + "'");
}

std::string describe(const EditOp& op) {
  std::string out(to_string(op.kind));
  out += '@';
  out += std::to_string(op.position);
  if (op.boundary) {
    out += op.kind == EditKind::kTransposition ? "->" + std::to_string(op.moved_to) : "";
    out += "[space]";
    return out;
  }
  switch (op.kind) {
    case EditKind::kDeletion:
      out += '-' + op.from;
      break;
    case EditKind::kInsertion:
      out += '+' + op.to;
      break;
    case EditKind::kSubstitution:
      out += ':' + op.from + '>' + op.to;
      break;
    case EditKind::kTransposition:
      out += ':' + op.from + op.to;
      break;
  }
  return out;
}

GraphemeSeq apply(const GraphemeSeq& word, const EditOp& op) {
  if (op.boundary) throw PreconditionError("boundary ops apply to token spans, not words");
  Clusters parts = word.clusters();
  const std::size_t n = parts.size();
  const std::size_t p = op.position;
  auto check_from = [&](std::size_t at, const std::string& expected) {
    if (!expected.empty() && parts[at] != expected) {
      throw PreconditionError("op expects '" + expected + "' at " + std::to_string(at));
    }
  };
  switch (op.kind) {
    case EditKind::kInsertion:
      if (p > n) throw PreconditionError("insertion position out of range");
      if (op.to.empty()) throw PreconditionError("insertion needs a cluster");
      parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(p), op.to);
      break;
    case EditKind::kDeletion:
      if (p >= n) throw PreconditionError("deletion position out of range");
      check_from(p, op.from);
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(p));
      break;
    case EditKind::kSubstitution:
      if (p >= n) throw PreconditionError("substitution position out of range");
      check_from(p, op.from);
      if (op.to.empty()) throw PreconditionError("substitution needs a cluster");
      if (parts[p] == op.to) throw PreconditionError("identity substitution");
      parts[p] = op.to;
      break;
    case EditKind::kTransposition:
      if (p + 1 >= n) throw PreconditionError("transposition position out of range");
      check_from(p, op.from);
      check_from(p + 1, op.to);
      if (parts[p] == parts[p + 1]) throw PreconditionError("transposition of equal clusters");
      std::swap(parts[p], parts[p + 1]);
      break;
  }
  return GraphemeSeq::from_clusters(parts);
}

GraphemeSeq apply_script(const GraphemeSeq& word, const EditScript& script) {
  GraphemeSeq current = word;
  std::ptrdiff_t offset = 0;
  for (EditOp op : script) {
    op.position = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(op.position) + offset);
    current = apply(current, op);
    if (op.kind == EditKind::kInsertion) ++offset;
    if (op.kind == EditKind::kDeletion) --offset;
  }
  return current;
}

SingleEdits single_edits(const GraphemeSeq& word, const Alphabet& alphabet) {
  if (word.empty()) throw PreconditionError("single_edits needs a nonempty word");
  std::vector<std::string> letters;
  letters.reserve(alphabet.size());
  for (const Letter c : alphabet.letters()) letters.push_back(to_utf8(c));

  SingleEdits out;
  std::unordered_set<std::string> seen;
  auto add = [&](EditOp op) {
    ++out.raw_count;
    if (op.kind == EditKind::kTransposition && word[op.position] == word[op.position + 1]) return;
    GraphemeSeq variant = apply(word, op);
    if (seen.insert(variant.utf8()).second) out.variants.emplace_back(std::move(variant), std::move(op));
  };

  const std::size_t n = word.size();
  for (std::size_t p = 0; p <= n; ++p) {
    if (p < n) add({EditKind::kDeletion, p, std::string(word[p]), {}});
    for (const std::string& letter : letters) add({EditKind::kInsertion, p, {}, letter});
    if (p < n) {
      for (const std::string& letter : letters) {
        if (letter != word[p]) add({EditKind::kSubstitution, p, std::string(word[p]), letter});
      }
    }
    if (p + 1 < n) {
      add({EditKind::kTransposition, p, std::string(word[p]), std::string(word[p + 1])});
    }
  }
  return out;
}

std::size_t damerau_distance(const GraphemeSeq& a, const GraphemeSeq& b) {
  return osa(a.clusters(), b.clusters(), kInfinity);
}

bool within_distance(const GraphemeSeq& a, const GraphemeSeq& b, std::size_t bound) {
  const std::size_t n = a.size(), m = b.size();
  if ((n > m ? n - m : m - n) > bound) return false;
  return osa(a.clusters(), b.clusters(), bound) <= bound;
}

EditScript diagnose(const GraphemeSeq& wrong, const GraphemeSeq& intended) {
  const Clusters in = intended.clusters();
  const Clusters out = wrong.clusters();
  const SuffixTable table(in, out);
  const std::size_t n = in.size(), m = out.size();

  EditScript script;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    const std::size_t here = table.at(i, j);
    if (i < n && here == table.at(i + 1, j) + 1) {
      script.push_back({EditKind::kDeletion, i, std::string(in[i]), {}});
      ++i;
    } else if (j < m && here == table.at(i, j + 1) + 1) {
      script.push_back({EditKind::kInsertion, i, {}, std::string(out[j])});
      ++j;
    } else if (i < n && j < m && in[i] != out[j] && here == table.at(i + 1, j + 1) + 1) {
      script.push_back({EditKind::kSubstitution, i, std::string(in[i]), std::string(out[j])});
      ++i;
      ++j;
    } else if (i + 1 < n && j + 1 < m && in[i] == out[j + 1] && in[i + 1] == out[j] &&
               in[i] != in[i + 1] && here == table.at(i + 2, j + 2) + 1) {
      script.push_back({EditKind::kTransposition, i, std::string(in[i]), std::string(in[i + 1])});
      i += 2;
      j += 2;
    } else {
      // Only a free match keeps the script minimal here.
      ++i;
      ++j;
    }
  }
  return script;
}

std::vector<Candidate> generate_candidates(const GraphemeSeq& nonword, const Lexicon& lexicon,
                                           std::size_t max_distance) {
  if (max_distance < 1 || max_distance > 2) {
    throw PreconditionError("max_distance must be 1 or 2");
  }
  std::vector<std::uint32_t> ids;
  if (max_distance == 1) {
    for (const std::string& key : deletion_keys(nonword)) {
      const auto bucket = lexicon.deletion_neighbours(key);
      ids.insert(ids.end(), bucket.begin(), bucket.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  } else {
    ids.resize(lexicon.size());
    for (std::size_t id = 0; id < ids.size(); ++id) ids[id] = static_cast<std::uint32_t>(id);
  }

  std::vector<Candidate> out;
  for (const std::uint32_t id : ids) {
    const GraphemeSeq& word = lexicon.entry(id).word;
    if (word == nonword || !within_distance(nonword, word, max_distance)) continue;
    out.push_back({id, diagnose(nonword, word)});
  }
  return out;
}

}  // namespace sindhispell
