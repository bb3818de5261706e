// Copyright 2026 The Crosscheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crosscheck/corpus/segmenter.h"

#include <string>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/utf8.h"
#include "unicode/uchar.h"

namespace crosscheck::assets {
extern const char kAbbreviations[];
}  // namespace crosscheck::assets

namespace crosscheck::corpus {
namespace {

const absl::flat_hash_set<std::string>& Abbreviations() {
  static const auto* set = [] {
    auto* s = new absl::flat_hash_set<std::string>;
    for (absl::string_view line : absl::StrSplit(
             assets::kAbbreviations, '\n', absl::SkipWhitespace())) {
      s->emplace(absl::AsciiStrToLower(absl::StripAsciiWhitespace(line)));
    }
    return s;
  }();
  return *set;
}

bool IsTerminal(char32_t c) { return c == '.' || c == '!' || c == '?'; }

bool IsClosing(char32_t c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == 0x201D ||
         c == 0x2019 || c == 0xBB;
}

bool IsOpeningQuote(char32_t c) {
  return c == '"' || c == '\'' || c == 0x201C || c == 0x2018 || c == 0xAB;
}

bool IsOpeningPunct(char32_t c) {
  return IsOpeningQuote(c) || c == '(' || c == '[';
}

// Decoded body with the byte offset of every code point.
struct Decoded {
  std::u32string chars;
  std::vector<size_t> byte_offsets;  // size chars.size() + 1
};

Decoded Decode(std::string_view text) {
  Decoded d;
  size_t pos = 0;
  while (pos < text.size()) {
    d.byte_offsets.push_back(pos);
    d.chars.push_back(DecodeUtf8(text, &pos));
  }
  d.byte_offsets.push_back(text.size());
  return d;
}

// Whether the period at `dot` closes an abbreviation or an initial.
bool ProtectedPeriod(const Decoded& d, std::string_view body, size_t dot) {
  size_t begin = dot;
  while (begin > 0 && !IsSpaceCodepoint(d.chars[begin - 1])) --begin;
  while (begin < dot && IsOpeningPunct(d.chars[begin])) ++begin;
  if (begin == dot) return false;
  if (dot - begin == 1 && u_isupper(d.chars[begin])) return true;
  const std::string word = absl::AsciiStrToLower(AbslView(body.substr(
      d.byte_offsets[begin], d.byte_offsets[dot + 1] - d.byte_offsets[begin])));
  return Abbreviations().contains(word);
}

}  // namespace

bool IsKnownAbbreviation(std::string_view word) {
  return Abbreviations().contains(absl::AsciiStrToLower(AbslView(word)));
}

std::vector<Sentence> SegmentSentences(std::string_view body) {
  const Decoded d = Decode(body);
  const size_t n = d.chars.size();
  std::vector<Sentence> sentences;

  auto emit = [&](size_t begin, size_t end) {
    while (begin < end && IsSpaceCodepoint(d.chars[begin])) ++begin;
    while (end > begin && IsSpaceCodepoint(d.chars[end - 1])) --end;
    if (begin == end) return;
    Sentence s;
    s.sentence_index = static_cast<int>(sentences.size());
    s.span_start = begin;
    s.span_end = end;
    s.text = std::string(body.substr(d.byte_offsets[begin],
                                     d.byte_offsets[end] - d.byte_offsets[begin]));
    sentences.push_back(std::move(s));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    const char32_t c = d.chars[i];
    if (c == '\n') {
      size_t j = i;
      int newlines = 0;
      while (j < n && IsSpaceCodepoint(d.chars[j])) {
        if (d.chars[j] == '\n') ++newlines;
        ++j;
      }
      if (newlines >= 2) {
        emit(start, i);
        start = j;
      }
      i = j;
      continue;
    }
    if (!IsTerminal(c)) {
      ++i;
      continue;
    }
    size_t end = i + 1;
    while (end < n && (IsTerminal(d.chars[end]) || IsClosing(d.chars[end]))) {
      ++end;
    }
    size_t next = end;
    while (next < n && IsSpaceCodepoint(d.chars[next])) ++next;
    const bool boundary =
        next > end && next < n &&
        (u_isupper(d.chars[next]) || IsOpeningQuote(d.chars[next])) &&
        !(c == '.' && end == i + 1 && ProtectedPeriod(d, body, i));
    if (boundary) {
      emit(start, end);
      start = next;
      i = next;
    } else {
      i = end;
    }
  }
  emit(start, n);
  return sentences;
}

}  // namespace crosscheck::corpus
