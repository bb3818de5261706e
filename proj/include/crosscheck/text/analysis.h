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

#ifndef CROSSCHECK_TEXT_ANALYSIS_H_
#define CROSSCHECK_TEXT_ANALYSIS_H_

// Word-level normalization shared by lexical overlap and the stub encoder.

#include <string>
#include <string_view>
#include <vector>

namespace crosscheck::text {

// Lowercased tokens at Unicode word boundaries. Segments without a letter
// or digit (punctuation, spaces, symbols) are dropped; numerals are kept.
// Typographic apostrophes are folded to '\''.
std::vector<std::string> TokenizeWords(std::string_view text);

// Membership in the shipped English stopword list. Expects a token as
// produced by TokenizeWords.
bool IsStopword(std::string_view token);

// Number of entries in the stopword list.
size_t StopwordCount();

// TokenizeWords -> drop stopwords -> strip possessive 's -> PorterStem.
// Order and multiplicity are preserved.
std::vector<std::string> ContentStems(std::string_view text);

}  // namespace crosscheck::text

#endif  // CROSSCHECK_TEXT_ANALYSIS_H_
