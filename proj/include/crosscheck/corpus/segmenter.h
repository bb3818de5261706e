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

#ifndef CROSSCHECK_CORPUS_SEGMENTER_H_
#define CROSSCHECK_CORPUS_SEGMENTER_H_

#include <string_view>
#include <vector>

#include "crosscheck/corpus/types.h"

namespace crosscheck::corpus {

// Rule-based English sentence splitting.
//
// A boundary is terminal punctuation (. ! ?), optionally followed by
// closing quotes or brackets, then whitespace, then an uppercase letter or
// an opening quote. A period does not end a sentence when the word it
// closes is a known abbreviation ("Mr.", "U.S.") or a single-letter
// initial. A blank line always ends a sentence.
//
// Sentences are trimmed; the whitespace between them belongs to no
// sentence. Spans are code-point offsets. Text without any boundary yields
// one sentence; blank text yields none.
std::vector<Sentence> SegmentSentences(std::string_view body);

// True if `word`, with its trailing period, is in the shipped abbreviation
// list. Case-insensitive.
bool IsKnownAbbreviation(std::string_view word);

}  // namespace crosscheck::corpus

#endif  // CROSSCHECK_CORPUS_SEGMENTER_H_
