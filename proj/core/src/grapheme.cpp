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

#include "sindhispell/grapheme.hpp"

#include <cstdio>
#include <string>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "sindhispell/error.hpp"

namespace sindhispell {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  return *n;
}

const icu::Normalizer2& nfkd() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFKD normalizer unavailable");
  return *n;
}

bool is_presentation_form(UChar32 c) {
  return (c >= 0xFB50 && c <= 0xFDFF) || (c >= 0xFE70 && c <= 0xFEFE);
}

bool is_stripped(UChar32 c) {
  switch (c) {
    case 0x200B:  // zero width space
    case 0x200C:  // zero width non-joiner
    case 0x200D:  // zero width joiner
    case 0x2060:  // word joiner
    case 0xFEFF:  // byte order mark
    case 0x0640:  // tatweel
      return true;
    default:
      return false;
  }
}

bool is_combining(UChar32 c) {
  const int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

// Folds presentation forms and drops zero-width characters. Input scalars
// have already been validated.
icu::UnicodeString fold(const std::u32string& scalars) {
  icu::UnicodeString out;
  for (const char32_t ch : scalars) {
    const auto c = static_cast<UChar32>(ch);
    if (is_stripped(c)) continue;
    if (!is_presentation_form(c)) {
      out.append(c);
      continue;
    }
    icu::UnicodeString decomposition;
    if (!nfkd().getDecomposition(c, decomposition)) {
      out.append(c);
      continue;
    }
    // Isolated harakat forms decompose to SPACE + mark (or TATWEEL + mark).
    int32_t start = 0;
    if (decomposition.length() > 1 &&
        (decomposition.charAt(0) == 0x0020 || decomposition.charAt(0) == 0x0640)) {
      start = 1;
    }
    for (int32_t i = start; i < decomposition.length();) {
      const UChar32 d = decomposition.char32At(i);
      if (u_isUWhiteSpace(d)) {
        char hex[16];
        std::snprintf(hex, sizeof hex, "U+%04X", static_cast<unsigned>(c));
        throw TextError(std::string("presentation form ") + hex + " expands to more than one word");
      }
      if (!is_stripped(d)) out.append(d);
      i += U16_LENGTH(d);
    }
  }
  return out;
}

// True when `cluster` is exactly one normalized cluster that starts at an
// NFC boundary, so it can be joined to neighbours without renormalizing.
bool is_normalized_cluster(std::string_view cluster) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(cluster.data());
  const auto length = static_cast<int32_t>(cluster.size());
  icu::UnicodeString piece;
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0 || is_stripped(c) || is_presentation_form(c) || u_isUWhiteSpace(c) ||
        u_charType(c) == U_UNASSIGNED) {
      return false;
    }
    if (piece.isEmpty() ? (is_combining(c) || !nfc().hasBoundaryBefore(c)) : !is_combining(c)) {
      return false;
    }
    piece.append(c);
  }
  UErrorCode status = U_ZERO_ERROR;
  return nfc().isNormalized(piece, status) && U_SUCCESS(status);
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  for (int32_t i = 0; i < length;) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw TextError("ill-formed UTF-8 at byte " + std::to_string(at));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(Letter c) {
  std::string out;
  icu::UnicodeString(static_cast<UChar32>(c)).toUTF8String(out);
  return out;
}

bool is_whitespace(Letter c) noexcept {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_punctuation(Letter c) noexcept {
  // Covers the Arabic full stop, comma and question mark (all Po).
  return u_ispunct(static_cast<UChar32>(c));
}

GraphemeSeq normalize(std::string_view text) {
  const std::u32string scalars = decode_utf8(text);
  for (const char32_t c : scalars) {
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      throw TextError("token contains whitespace");
    }
    if (u_charType(static_cast<UChar32>(c)) == U_UNASSIGNED) {
      throw TextError("token contains unassigned code point");
    }
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::UnicodeString composed = nfc().normalize(fold(scalars), status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");

  std::string utf8;
  std::vector<std::uint32_t> bounds{0};
  for (int32_t i = 0; i < composed.length();) {
    const UChar32 c = composed.char32At(i);
    if (!utf8.empty() && !is_combining(c)) {
      bounds.push_back(static_cast<std::uint32_t>(utf8.size()));
    }
    icu::UnicodeString(c).toUTF8String(utf8);
    i += U16_LENGTH(c);
  }
  if (!utf8.empty()) bounds.push_back(static_cast<std::uint32_t>(utf8.size()));
  return GraphemeSeq(std::move(utf8), std::move(bounds));
}

GraphemeSeq GraphemeSeq::from_clusters(std::span<const std::string_view> clusters) {
  // Fast path: every piece begins at an NFC boundary with a non-combining
  // character, so the concatenation is already normalized and segments
  // exactly at the piece boundaries.
  std::string text;
  std::vector<std::uint32_t> bounds{0};
  bool fast = true;
  for (const std::string_view cluster : clusters) {
    if (cluster.empty()) {
      fast = false;
      break;
    }
    if (!is_normalized_cluster(cluster)) {
      fast = false;
      break;
    }
    text.append(cluster);
    bounds.push_back(static_cast<std::uint32_t>(text.size()));
  }
  if (fast) return GraphemeSeq(std::move(text), std::move(bounds));

  std::string joined;
  for (const std::string_view cluster : clusters) joined.append(cluster);
  return normalize(joined);
}

Letter GraphemeSeq::base(std::size_t i) const noexcept {
  const std::string_view cluster = (*this)[i];
  const auto* bytes = reinterpret_cast<const uint8_t*>(cluster.data());
  int32_t at = 0;
  UChar32 c;
  U8_NEXT(bytes, at, static_cast<int32_t>(cluster.size()), c);
  return static_cast<Letter>(c);
}

std::vector<std::string_view> GraphemeSeq::clusters() const {
  std::vector<std::string_view> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

GraphemeSeq GraphemeSeq::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) throw PreconditionError("slice out of range");
  std::vector<std::string_view> parts;
  parts.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) parts.push_back((*this)[i]);
  return from_clusters(parts);
}

GraphemeSeq GraphemeSeq::concat(const GraphemeSeq& other) const {
  std::vector<std::string_view> parts = clusters();
  for (std::size_t i = 0; i < other.size(); ++i) parts.push_back(other[i]);
  return from_clusters(parts);
}

}  // namespace sindhispell
