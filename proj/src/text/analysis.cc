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

#include "crosscheck/text/analysis.h"

#include <memory>
#include <string>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/text/porter_stemmer.h"
#include "glog/logging.h"
#include "unicode/brkiter.h"
#include "unicode/locid.h"
#include "unicode/uchar.h"
#include "unicode/unistr.h"

namespace crosscheck::assets {
extern const char kStopwords[];
}  // namespace crosscheck::assets

namespace crosscheck::text {
namespace {

const absl::flat_hash_set<std::string>& StopwordSet() {
  static const auto* set = [] {
    auto* s = new absl::flat_hash_set<std::string>;
    for (absl::string_view line :
         absl::StrSplit(assets::kStopwords, '\n', absl::SkipWhitespace())) {
      s->emplace(absl::StripAsciiWhitespace(line));
    }
    return s;
  }();
  return *set;
}

icu::BreakIterator* WordBreaker() {
  thread_local std::unique_ptr<icu::BreakIterator> breaker = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(),
                                               status));
    CHECK(U_SUCCESS(status)) << "ICU word break iterator: "
                             << u_errorName(status);
    return it;
  }();
  return breaker.get();
}

bool HasLetterOrDigit(const icu::UnicodeString& s) {
  for (int32_t i = 0; i < s.length();) {
    const UChar32 c = s.char32At(i);
    if (u_isalnum(c)) return true;
    i += U16_LENGTH(c);
  }
  return false;
}

void StripPossessive(std::string* token) {
  if (token->size() > 2 && token->ends_with("'s")) {
    token->resize(token->size() - 2);
  }
}

}  // namespace

std::vector<std::string> TokenizeWords(std::string_view text) {
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  ustr.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x2019)),
                      icu::UnicodeString(static_cast<UChar32>('\'')));
  ustr.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x02BC)),
                      icu::UnicodeString(static_cast<UChar32>('\'')));
  ustr.toLower(icu::Locale::getRoot());

  icu::BreakIterator* it = WordBreaker();
  it->setText(ustr);
  std::vector<std::string> tokens;
  int32_t start = it->first();
  for (int32_t end = it->next(); end != icu::BreakIterator::DONE;
       start = end, end = it->next()) {
    icu::UnicodeString piece = ustr.tempSubStringBetween(start, end);
    if (!HasLetterOrDigit(piece)) continue;
    std::string utf8;
    piece.toUTF8String(utf8);
    tokens.push_back(std::move(utf8));
  }
  return tokens;
}

bool IsStopword(std::string_view token) {
  return StopwordSet().contains(AbslView(token));
}

size_t StopwordCount() { return StopwordSet().size(); }

std::vector<std::string> ContentStems(std::string_view text) {
  std::vector<std::string> stems;
  for (std::string& token : TokenizeWords(text)) {
    if (IsStopword(token)) continue;
    StripPossessive(&token);
    if (IsStopword(token)) continue;
    stems.push_back(PorterStem(token));
  }
  return stems;
}

}  // namespace crosscheck::text
