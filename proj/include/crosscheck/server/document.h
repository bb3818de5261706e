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

#ifndef CROSSCHECK_SERVER_DOCUMENT_H_
#define CROSSCHECK_SERVER_DOCUMENT_H_

// The self-contained cluster file: the cluster itself plus the output of
// every pipeline stage that has run. A stage that has not run is absent
// (nullopt), which is different from having run and produced nothing.

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/claimext/claims.h"
#include "crosscheck/corpus/collect.h"
#include "crosscheck/corpus/types.h"
#include "crosscheck/nlilink/link.h"
#include "crosscheck/pairfilter/filter.h"
#include "crosscheck/server/annotate.h"
#include "json.hpp"

namespace crosscheck::server {

using Json = nlohmann::ordered_json;

struct ClusterDocument {
  corpus::ArticleCluster cluster;
  std::vector<corpus::FetchFailure> fetch_failures;
  std::optional<std::vector<claimext::Claim>> claims;
  std::optional<std::vector<pairfilter::CandidatePair>> candidates;
  std::optional<std::vector<nlilink::ClaimLink>> links;
  std::optional<std::vector<nlilink::SentenceLink>> sentence_links;
  std::optional<std::vector<AnnotatedArticle>> annotations;
  // Per-stage record of the backends and settings that produced it.
  Json provenance = Json::object();

  bool operator==(const ClusterDocument&) const = default;
};

Json ToJson(const corpus::Sentence& s);
Json ToJson(const corpus::Article& a);
Json ToJson(const corpus::FetchFailure& f);
Json ToJson(const claimext::Claim& c);
Json ToJson(const pairfilter::CandidatePair& p);
Json ToJson(const nlilink::ClaimLink& l);
Json ToJson(const nlilink::SentenceLink& l);
Json ToJson(const EvidenceSnippet& e);
Json ToJson(const Highlight& h);
Json ToJson(const AnnotatedArticle& a);
Json ToJson(const ClusterDocument& doc);

// Article metadata as listed by the API: no body, no sentences.
Json ArticleSummaryJson(const corpus::Article& a);

// Strict inverse of ToJson(ClusterDocument). Structural problems are
// DataLoss errors naming the offending field.
absl::StatusOr<ClusterDocument> DocumentFromJson(const Json& j);

absl::StatusOr<AnnotatedArticle> AnnotatedArticleFromJson(const Json& j);

// Checks the cross-references a loaded document promises: sentence spans
// tile into the body, claims name existing sentences, candidates and links
// name existing claims, annotations match their articles.
absl::Status ValidateDocument(const ClusterDocument& doc);

}  // namespace crosscheck::server

#endif  // CROSSCHECK_SERVER_DOCUMENT_H_
