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

#ifndef CROSSCHECK_BASE_UTF8_H_
#define CROSSCHECK_BASE_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace crosscheck {

// Text offsets exposed in documents and over the wire count Unicode code
// points. Internally strings are UTF-8; these helpers translate.

// Number of code points in `text`. Invalid lead bytes count as one each.
size_t CodepointLength(std::string_view text);

// Byte offset of each code point boundary, including the end: result has
// CodepointLength(text) + 1 entries.
std::vector<size_t> CodepointByteOffsets(std::string_view text);

// Substring covering code points [begin, end). Clamped to the text.
std::string_view CodepointSubstr(std::string_view text, size_t begin,
                                 size_t end);

// Appends the UTF-8 encoding of `codepoint`.
void AppendUtf8(char32_t codepoint, std::string* out);

// Decodes the code point starting at text[*pos] and advances *pos.
// Malformed sequences decode as U+FFFD and consume one byte.
char32_t DecodeUtf8(std::string_view text, size_t* pos);

// Trims ASCII and Unicode whitespace (as decoded) from both ends.
std::string_view TrimWhitespace(std::string_view text);

// True for the whitespace characters the segmenter and extractor treat as
// separators (ASCII space family, NBSP and the U+2000 block spaces).
bool IsSpaceCodepoint(char32_t c);

}  // namespace crosscheck

#endif  // CROSSCHECK_BASE_UTF8_H_
