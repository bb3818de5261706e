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

#ifndef CROSSCHECK_SERVER_ANNOTATE_H_
#define CROSSCHECK_SERVER_ANNOTATE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/corpus/types.h"
#include "crosscheck/nlilink/link.h"

namespace crosscheck::server {

enum class Polarity { kSupported, kContradicted, kMixed };

std::string_view PolarityName(Polarity p);
std::optional<Polarity> ParsePolarity(std::string_view name);

// A sentence in another article that supports or contradicts a highlight.
struct EvidenceSnippet {
  nlilink::NliLabel label = nlilink::NliLabel::kEntailment;
  double confidence = 0.0;
  std::string source_article_id;
  std::string source_venue;
  std::string source_title;
  std::string source_url;
  std::string snippet_text;  // the evidence sentence, verbatim
  int source_sentence_index = 0;

  bool operator==(const EvidenceSnippet&) const = default;
};

// A linked sentence of the focus article. Spans are code-point offsets into
// the body, copied from the sentence.
struct Highlight {
  int sentence_index = 0;
  size_t span_start = 0;
  size_t span_end = 0;
  Polarity polarity = Polarity::kSupported;
  std::vector<EvidenceSnippet> evidence;

  bool operator==(const Highlight&) const = default;
};

struct AnnotatedArticle {
  std::string article_id;
  std::string url;
  std::string venue;
  std::string title;
  std::string body;
  std::vector<Highlight> highlights;

  bool operator==(const AnnotatedArticle&) const = default;
};

// supported iff every label is entailment, contradicted iff every label is
// contradiction, mixed otherwise. `labels` must be non-empty.
Polarity PolarityOf(std::span<const nlilink::NliLabel> labels);

// One highlight per focus sentence with at least one link, in sentence
// order; evidence by confidence descending, then source article, sentence
// and label. NotFound for an unknown focus id; DataLoss if a link names a
// sentence the cluster lacks.
absl::StatusOr<AnnotatedArticle> AnnotateArticle(
    const corpus::ArticleCluster& cluster,
    std::span<const nlilink::SentenceLink> links,
    std::string_view focus_article_id);

// AnnotateArticle for every article, in cluster order.
absl::StatusOr<std::vector<AnnotatedArticle>> AnnotateCluster(
    const corpus::ArticleCluster& cluster,
    std::span<const nlilink::SentenceLink> links);

}  // namespace crosscheck::server

#endif  // CROSSCHECK_SERVER_ANNOTATE_H_
