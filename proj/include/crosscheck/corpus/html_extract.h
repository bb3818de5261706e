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

#ifndef CROSSCHECK_CORPUS_HTML_EXTRACT_H_
#define CROSSCHECK_CORPUS_HTML_EXTRACT_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace crosscheck::corpus {

struct ExtractedDocument {
  std::string title;
  std::string venue;  // og:site_name when present, else empty
  std::string body;   // paragraphs separated by "\n\n"
};

// Pulls the readable article text out of a page.
//
// Markup inside navigation-like containers (nav, header, footer, aside,
// menu, form, and elements whose class or id names a menu, sidebar, ad,
// share bar, cookie banner and so on) is discarded, along with scripts and
// styles. Remaining <p> blocks whose text is mostly link anchors are
// dropped. When the page has no usable <p> blocks, other block elements
// with enough running text are used instead.
//
// Input without any markup is treated as plain text and returned unchanged
// with an empty title. Fails with kInvalidArgument ("empty document") when
// nothing extractable remains.
absl::StatusOr<ExtractedDocument> ExtractBody(std::string_view html);

// True if `text` contains something that looks like an HTML tag.
bool LooksLikeHtml(std::string_view text);

// Decodes character references (&amp;, &#8217;, &#x2019;, ...). Unknown
// named references are left as written.
std::string DecodeHtmlEntities(std::string_view text);

}  // namespace crosscheck::corpus

#endif  // CROSSCHECK_CORPUS_HTML_EXTRACT_H_
