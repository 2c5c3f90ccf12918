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

#include <compare>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sindhispell {

// A single Unicode scalar value used as a base letter.
using Letter = char32_t;

// A normalized Sindhi word held as a sequence of grapheme clusters (a base
// character plus its attached combining marks). Length, indexing and all
// edit operations count clusters, never scalar values.
//
// Instances only come out of normalize() or the cluster-level factories
// below, which re-check normalization, so every GraphemeSeq is a fixed
// point of normalize().
class GraphemeSeq {
 public:
  GraphemeSeq() : bounds_{0} {}

  // Builds a sequence from clusters taken from other normalized sequences
  // or single letters. Falls back to full normalization when the pieces do
  // not join at a normalization boundary.
  static GraphemeSeq from_clusters(std::span<const std::string_view> clusters);

  std::size_t size() const noexcept { return bounds_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }

  std::string_view operator[](std::size_t i) const noexcept {
    return std::string_view(text_).substr(bounds_[i], bounds_[i + 1] - bounds_[i]);
  }

  // The first scalar value of cluster i.
  Letter base(std::size_t i) const noexcept;

  const std::string& utf8() const noexcept { return text_; }

  std::vector<std::string_view> clusters() const;

  // Clusters [begin, end).
  GraphemeSeq slice(std::size_t begin, std::size_t end) const;
  GraphemeSeq concat(const GraphemeSeq& other) const;

  friend bool operator==(const GraphemeSeq& a, const GraphemeSeq& b) noexcept {
    return a.text_ == b.text_;
  }
  // Codepoint order (UTF-8 byte order coincides with it).
  friend std::strong_ordering operator<=>(const GraphemeSeq& a, const GraphemeSeq& b) noexcept {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  friend GraphemeSeq normalize(std::string_view text);
  GraphemeSeq(std::string text, std::vector<std::uint32_t> bounds)
      : text_(std::move(text)), bounds_(std::move(bounds)) {}

  std::string text_;
  std::vector<std::uint32_t> bounds_;  // byte offsets, size() + 1 entries
};

// Canonical form of one token: presentation forms folded to canonical
// letters, zero-width characters and tatweel removed, then NFC. Heh and
// do-chashmi heh, Arabic yeh and Farsi yeh stay distinct.
// Throws TextError on ill-formed UTF-8, whitespace, or unassigned scalars.
GraphemeSeq normalize(std::string_view text);

// UTF-8 helpers shared by the parsers.
std::string to_utf8(Letter c);
std::u32string decode_utf8(std::string_view text);  // throws TextError

bool is_whitespace(Letter c) noexcept;
bool is_punctuation(Letter c) noexcept;

}  // namespace sindhispell

template <>
struct std::hash<sindhispell::GraphemeSeq> {
  std::size_t operator()(const sindhispell::GraphemeSeq& s) const noexcept {
    return std::hash<std::string>{}(s.utf8());
  }
};
