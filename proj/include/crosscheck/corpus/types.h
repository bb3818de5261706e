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

#ifndef CROSSCHECK_CORPUS_TYPES_H_
#define CROSSCHECK_CORPUS_TYPES_H_

#include <string>
#include <vector>

namespace crosscheck::corpus {

// A sentence addressed by code-point offsets into its article body.
// Invariant: body[span_start, span_end) == text and text is not blank.
struct Sentence {
  int sentence_index = 0;
  size_t span_start = 0;
  size_t span_end = 0;  // exclusive
  std::string text;

  bool operator==(const Sentence&) const = default;
};

struct Article {
  std::string article_id;
  std::string url;
  std::string venue;
  std::string title;
  std::string body;
  std::vector<Sentence> sentences;

  bool operator==(const Article&) const = default;
};

// The articles covering one story.
struct ArticleCluster {
  std::string cluster_id;
  std::string story_title;
  std::vector<Article> articles;
  std::string created_at;  // RFC 3339, UTC ("2026-01-02T03:04:05Z")

  bool operator==(const ArticleCluster&) const = default;

  const Article* FindArticle(std::string_view article_id) const {
    for (const Article& a : articles) {
      if (a.article_id == article_id) return &a;
    }
    return nullptr;
  }
};

}  // namespace crosscheck::corpus

#endif  // CROSSCHECK_CORPUS_TYPES_H_
