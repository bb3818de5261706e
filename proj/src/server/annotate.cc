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

#include "crosscheck/server/annotate.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/strings.h"

namespace crosscheck::server {
namespace {

using nlilink::NliLabel;

absl::StatusOr<const corpus::Sentence*> FindSentence(
    const corpus::Article& article, int index) {
  if (index >= 0 && static_cast<size_t>(index) < article.sentences.size() &&
      article.sentences[index].sentence_index == index) {
    return &article.sentences[index];
  }
  return absl::DataLossError(absl::StrCat("article ", article.article_id,
                                          " has no sentence ", index));
}

bool EvidenceOrder(const EvidenceSnippet& x, const EvidenceSnippet& y) {
  if (x.confidence != y.confidence) return x.confidence > y.confidence;
  return std::tie(x.source_article_id, x.source_sentence_index, x.label) <
         std::tie(y.source_article_id, y.source_sentence_index, y.label);
}

}  // namespace

std::string_view PolarityName(Polarity p) {
  switch (p) {
    case Polarity::kSupported:
      return "supported";
    case Polarity::kContradicted:
      return "contradicted";
    case Polarity::kMixed:
      return "mixed";
  }
  return "mixed";
}

std::optional<Polarity> ParsePolarity(std::string_view name) {
  if (name == "supported") return Polarity::kSupported;
  if (name == "contradicted") return Polarity::kContradicted;
  if (name == "mixed") return Polarity::kMixed;
  return std::nullopt;
}

Polarity PolarityOf(std::span<const NliLabel> labels) {
  const bool all_entail = std::all_of(labels.begin(), labels.end(), [](auto l) {
    return l == NliLabel::kEntailment;
  });
  const bool all_contra = std::all_of(labels.begin(), labels.end(), [](auto l) {
    return l == NliLabel::kContradiction;
  });
  if (all_entail) return Polarity::kSupported;
  if (all_contra) return Polarity::kContradicted;
  return Polarity::kMixed;
}

absl::StatusOr<AnnotatedArticle> AnnotateArticle(
    const corpus::ArticleCluster& cluster,
    std::span<const nlilink::SentenceLink> links,
    std::string_view focus_article_id) {
  const corpus::Article* focus = cluster.FindArticle(focus_article_id);
  if (focus == nullptr) {
    return absl::NotFoundError(absl::StrCat(
        "no article '", AbslView(focus_article_id), "' in cluster ",
        cluster.cluster_id));
  }
  std::map<int, std::vector<EvidenceSnippet>> by_sentence;
  for (const nlilink::SentenceLink& link : links) {
    const nlilink::SentenceRef* mine = nullptr;
    const nlilink::SentenceRef* other = nullptr;
    if (link.focus.article_id == focus_article_id) {
      mine = &link.focus;
      other = &link.evidence;
    } else if (link.evidence.article_id == focus_article_id) {
      mine = &link.evidence;
      other = &link.focus;
    } else {
      continue;
    }
    if (link.label == NliLabel::kNeutral) {
      return absl::DataLossError("sentence link with neutral label");
    }
    RETURN_IF_ERROR(FindSentence(*focus, mine->sentence_index).status());
    const corpus::Article* source = cluster.FindArticle(other->article_id);
    if (source == nullptr) {
      return absl::DataLossError(
          absl::StrCat("link names unknown article ", other->article_id));
    }
    ASSIGN_OR_RETURN(const corpus::Sentence* evidence,
                     FindSentence(*source, other->sentence_index));
    by_sentence[mine->sentence_index].push_back(EvidenceSnippet{
        link.label, link.confidence, source->article_id, source->venue,
        source->title, source->url, evidence->text,
        evidence->sentence_index});
  }

  AnnotatedArticle out{focus->article_id, focus->url,  focus->venue,
                       focus->title,      focus->body, {}};
  for (auto& [index, evidence] : by_sentence) {
    std::sort(evidence.begin(), evidence.end(), EvidenceOrder);
    std::vector<NliLabel> labels;
    for (const auto& e : evidence) labels.push_back(e.label);
    const corpus::Sentence& s = focus->sentences[index];
    out.highlights.push_back(Highlight{index, s.span_start, s.span_end,
                                       PolarityOf(labels),
                                       std::move(evidence)});
  }
  return out;
}

absl::StatusOr<std::vector<AnnotatedArticle>> AnnotateCluster(
    const corpus::ArticleCluster& cluster,
    std::span<const nlilink::SentenceLink> links) {
  std::vector<AnnotatedArticle> out;
  for (const corpus::Article& a : cluster.articles) {
    ASSIGN_OR_RETURN(AnnotatedArticle annotated,
                     AnnotateArticle(cluster, links, a.article_id));
    out.push_back(std::move(annotated));
  }
  return out;
}

}  // namespace crosscheck::server
