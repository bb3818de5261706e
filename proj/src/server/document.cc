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

#include "crosscheck/server/document.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string_view>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/utf8.h"

namespace crosscheck::server {
namespace {

using claimext::Claim;
using nlilink::ClaimLink;
using nlilink::SentenceLink;
using nlilink::SentenceRef;

// Thrown inside the parsers and turned into DataLoss at the boundary.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T Field(const Json& j, const char* key) {
  return j.at(key).get<T>();
}

template <typename Enum, typename Parser>
Enum EnumField(const Json& j, const char* key, Parser parse) {
  const std::string value = Field<std::string>(j, key);
  std::optional<Enum> e = parse(value);
  if (!e) throw ParseError(absl::StrCat("bad ", key, " '", value, "'"));
  return *e;
}

template <typename T, typename Fn>
std::vector<T> ListField(const Json& j, const char* key, Fn parse) {
  std::vector<T> out;
  for (const Json& item : j.at(key)) out.push_back(parse(item));
  return out;
}

template <typename T>
Json ListJson(const std::vector<T>& items) {
  Json out = Json::array();
  for (const T& item : items) out.push_back(ToJson(item));
  return out;
}

corpus::Sentence ParseSentence(const Json& j) {
  return {Field<int>(j, "sentence_index"), Field<size_t>(j, "span_start"),
          Field<size_t>(j, "span_end"), Field<std::string>(j, "text")};
}

corpus::Article ParseArticle(const Json& j) {
  return {Field<std::string>(j, "article_id"), Field<std::string>(j, "url"),
          Field<std::string>(j, "venue"),      Field<std::string>(j, "title"),
          Field<std::string>(j, "body"),
          ListField<corpus::Sentence>(j, "sentences", ParseSentence)};
}

corpus::FetchFailure ParseFailure(const Json& j) {
  return {Field<std::string>(j, "source"), Field<std::string>(j, "reason")};
}

Claim ParseClaim(const Json& j) {
  return {Field<std::string>(j, "claim_id"),
          Field<std::string>(j, "article_id"),
          Field<int>(j, "sentence_index"), Field<std::string>(j, "text"),
          EnumField<claimext::ExtractionMethod>(
              j, "extraction_method", claimext::ParseExtractionMethod)};
}

pairfilter::CandidatePair ParseCandidate(const Json& j) {
  return {Field<std::string>(j, "claim_a"), Field<std::string>(j, "claim_b"),
          Field<double>(j, "score"),
          EnumField<pairfilter::FilterMethod>(j, "method",
                                              pairfilter::ParseFilterMethod)};
}

nlilink::NliLabel ParseLinkLabel(const Json& j) {
  nlilink::NliLabel label =
      EnumField<nlilink::NliLabel>(j, "label", nlilink::ParseNliLabel);
  if (label == nlilink::NliLabel::kNeutral) {
    throw ParseError("link with neutral label");
  }
  return label;
}

ClaimLink ParseClaimLink(const Json& j) {
  return {Field<std::string>(j, "premise_claim"),
          Field<std::string>(j, "hypothesis_claim"), ParseLinkLabel(j),
          Field<double>(j, "confidence")};
}

SentenceRef ParseRef(const Json& j) {
  return {Field<std::string>(j, "article_id"), Field<int>(j, "sentence_index")};
}

SentenceLink ParseSentenceLink(const Json& j) {
  return {ParseRef(j.at("focus")),
          ParseRef(j.at("evidence")),
          ParseLinkLabel(j),
          Field<double>(j, "confidence"),
          Field<std::string>(j, "focus_claim_id"),
          Field<std::string>(j, "evidence_claim_id"),
          Field<std::string>(j, "focus_claim_text"),
          Field<std::string>(j, "evidence_claim_text")};
}

EvidenceSnippet ParseEvidence(const Json& j) {
  return {ParseLinkLabel(j),
          Field<double>(j, "confidence"),
          Field<std::string>(j, "source_article_id"),
          Field<std::string>(j, "source_venue"),
          Field<std::string>(j, "source_title"),
          Field<std::string>(j, "source_url"),
          Field<std::string>(j, "snippet_text"),
          Field<int>(j, "source_sentence_index")};
}

Highlight ParseHighlight(const Json& j) {
  return {Field<int>(j, "sentence_index"), Field<size_t>(j, "span_start"),
          Field<size_t>(j, "span_end"),
          EnumField<Polarity>(j, "polarity", ParsePolarity),
          ListField<EvidenceSnippet>(j, "evidence", ParseEvidence)};
}

AnnotatedArticle ParseAnnotated(const Json& j) {
  return {Field<std::string>(j, "article_id"), Field<std::string>(j, "url"),
          Field<std::string>(j, "venue"),      Field<std::string>(j, "title"),
          Field<std::string>(j, "body"),
          ListField<Highlight>(j, "highlights", ParseHighlight)};
}

template <typename T, typename Fn>
std::optional<std::vector<T>> OptionalList(const Json& j, const char* key,
                                           Fn parse) {
  if (!j.contains(key)) return std::nullopt;
  return ListField<T>(j, key, parse);
}

template <typename Fn>
auto Guarded(Fn fn) -> absl::StatusOr<decltype(fn())> {
  try {
    return fn();
  } catch (const Json::exception& e) {
    return absl::DataLossError(absl::StrCat("malformed document: ", e.what()));
  } catch (const ParseError& e) {
    return absl::DataLossError(absl::StrCat("malformed document: ", e.what()));
  }
}

}  // namespace

Json ToJson(const corpus::Sentence& s) {
  return {{"sentence_index", s.sentence_index},
          {"span_start", s.span_start},
          {"span_end", s.span_end},
          {"text", s.text}};
}

Json ToJson(const corpus::Article& a) {
  Json j = ArticleSummaryJson(a);
  j.erase("sentence_count");
  j["body"] = a.body;
  j["sentences"] = ListJson(a.sentences);
  return j;
}

Json ArticleSummaryJson(const corpus::Article& a) {
  return {{"article_id", a.article_id},
          {"url", a.url},
          {"venue", a.venue},
          {"title", a.title},
          {"sentence_count", a.sentences.size()}};
}

Json ToJson(const corpus::FetchFailure& f) {
  return {{"source", f.source}, {"reason", f.reason}};
}

Json ToJson(const Claim& c) {
  return {{"claim_id", c.claim_id},
          {"article_id", c.article_id},
          {"sentence_index", c.sentence_index},
          {"text", c.text},
          {"extraction_method",
           claimext::ExtractionMethodName(c.extraction_method)}};
}

Json ToJson(const pairfilter::CandidatePair& p) {
  return {{"claim_a", p.claim_a},
          {"claim_b", p.claim_b},
          {"score", p.score},
          {"method", pairfilter::FilterMethodName(p.method)}};
}

Json ToJson(const ClaimLink& l) {
  return {{"premise_claim", l.premise_claim},
          {"hypothesis_claim", l.hypothesis_claim},
          {"label", nlilink::NliLabelName(l.label)},
          {"confidence", l.confidence}};
}

Json ToJson(const SentenceLink& l) {
  auto ref = [](const SentenceRef& r) {
    return Json{{"article_id", r.article_id},
                {"sentence_index", r.sentence_index}};
  };
  return {{"focus", ref(l.focus)},
          {"evidence", ref(l.evidence)},
          {"label", nlilink::NliLabelName(l.label)},
          {"confidence", l.confidence},
          {"focus_claim_id", l.focus_claim_id},
          {"evidence_claim_id", l.evidence_claim_id},
          {"focus_claim_text", l.focus_claim_text},
          {"evidence_claim_text", l.evidence_claim_text}};
}

Json ToJson(const EvidenceSnippet& e) {
  return {{"label", nlilink::NliLabelName(e.label)},
          {"confidence", e.confidence},
          {"source_article_id", e.source_article_id},
          {"source_venue", e.source_venue},
          {"source_title", e.source_title},
          {"source_url", e.source_url},
          {"snippet_text", e.snippet_text},
          {"source_sentence_index", e.source_sentence_index}};
}

Json ToJson(const Highlight& h) {
  return {{"sentence_index", h.sentence_index},
          {"span_start", h.span_start},
          {"span_end", h.span_end},
          {"polarity", PolarityName(h.polarity)},
          {"evidence", ListJson(h.evidence)}};
}

Json ToJson(const AnnotatedArticle& a) {
  return {{"article_id", a.article_id}, {"url", a.url},
          {"venue", a.venue},           {"title", a.title},
          {"body", a.body},             {"highlights", ListJson(a.highlights)}};
}

Json ToJson(const ClusterDocument& doc) {
  Json j = {{"cluster_id", doc.cluster.cluster_id},
            {"story_title", doc.cluster.story_title},
            {"created_at", doc.cluster.created_at},
            {"articles", ListJson(doc.cluster.articles)},
            {"fetch_failures", ListJson(doc.fetch_failures)}};
  if (doc.claims) j["claims"] = ListJson(*doc.claims);
  if (doc.candidates) j["candidates"] = ListJson(*doc.candidates);
  if (doc.links) j["links"] = ListJson(*doc.links);
  if (doc.sentence_links) j["sentence_links"] = ListJson(*doc.sentence_links);
  if (doc.annotations) j["annotations"] = ListJson(*doc.annotations);
  j["provenance"] = doc.provenance;
  return j;
}

absl::StatusOr<ClusterDocument> DocumentFromJson(const Json& j) {
  return Guarded([&] {
    if (!j.is_object()) throw ParseError("document is not an object");
    static constexpr std::string_view kKeys[] = {
        "cluster_id", "story_title",    "created_at",  "articles",
        "fetch_failures", "claims",     "candidates",  "links",
        "sentence_links", "annotations", "provenance"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(std::begin(kKeys), std::end(kKeys), key) ==
          std::end(kKeys)) {
        throw ParseError(absl::StrCat("unknown key '", key, "'"));
      }
    }
    ClusterDocument doc;
    doc.cluster.cluster_id = Field<std::string>(j, "cluster_id");
    doc.cluster.story_title = Field<std::string>(j, "story_title");
    doc.cluster.created_at = Field<std::string>(j, "created_at");
    doc.cluster.articles =
        ListField<corpus::Article>(j, "articles", ParseArticle);
    if (j.contains("fetch_failures")) {
      doc.fetch_failures =
          ListField<corpus::FetchFailure>(j, "fetch_failures", ParseFailure);
    }
    doc.claims = OptionalList<Claim>(j, "claims", ParseClaim);
    doc.candidates = OptionalList<pairfilter::CandidatePair>(
        j, "candidates", ParseCandidate);
    doc.links = OptionalList<ClaimLink>(j, "links", ParseClaimLink);
    doc.sentence_links =
        OptionalList<SentenceLink>(j, "sentence_links", ParseSentenceLink);
    doc.annotations =
        OptionalList<AnnotatedArticle>(j, "annotations", ParseAnnotated);
    if (j.contains("provenance")) doc.provenance = j.at("provenance");
    return doc;
  });
}

absl::StatusOr<AnnotatedArticle> AnnotatedArticleFromJson(const Json& j) {
  return Guarded([&] { return ParseAnnotated(j); });
}

absl::Status ValidateDocument(const ClusterDocument& doc) {
  const corpus::ArticleCluster& c = doc.cluster;
  if (c.articles.empty()) return absl::DataLossError("cluster has no articles");
  absl::flat_hash_map<std::string, const corpus::Article*> articles;
  for (const corpus::Article& a : c.articles) {
    if (!articles.emplace(a.article_id, &a).second) {
      return absl::DataLossError(
          absl::StrCat("duplicate article id ", a.article_id));
    }
    const size_t length = CodepointLength(a.body);
    size_t prev_end = 0;
    for (size_t i = 0; i < a.sentences.size(); ++i) {
      const corpus::Sentence& s = a.sentences[i];
      if (s.sentence_index != static_cast<int>(i) ||
          s.span_start >= s.span_end || s.span_end > length ||
          s.span_start < prev_end ||
          CodepointSubstr(a.body, s.span_start, s.span_end) != s.text) {
        return absl::DataLossError(absl::StrCat(
            "article ", a.article_id, " sentence ", i, " is inconsistent"));
      }
      prev_end = s.span_end;
    }
  }
  auto sentence_exists = [&](const std::string& article_id, int index) {
    auto it = articles.find(article_id);
    return it != articles.end() && index >= 0 &&
           static_cast<size_t>(index) < it->second->sentences.size();
  };
  absl::flat_hash_map<std::string, const Claim*> claims;
  if (doc.claims) {
    for (const Claim& cl : *doc.claims) {
      if (!sentence_exists(cl.article_id, cl.sentence_index) ||
          !claims.emplace(cl.claim_id, &cl).second) {
        return absl::DataLossError(
            absl::StrCat("claim ", cl.claim_id, " is dangling or repeated"));
      }
    }
  }
  auto claim_exists = [&](const std::string& id) {
    return claims.contains(id);
  };
  if (doc.candidates) {
    for (const auto& p : *doc.candidates) {
      if (!claim_exists(p.claim_a) || !claim_exists(p.claim_b)) {
        return absl::DataLossError("candidate names an unknown claim");
      }
    }
  }
  if (doc.links) {
    for (const auto& l : *doc.links) {
      if (!claim_exists(l.premise_claim) || !claim_exists(l.hypothesis_claim)) {
        return absl::DataLossError("link names an unknown claim");
      }
    }
  }
  if (doc.sentence_links) {
    for (const auto& l : *doc.sentence_links) {
      if (!sentence_exists(l.focus.article_id, l.focus.sentence_index) ||
          !sentence_exists(l.evidence.article_id, l.evidence.sentence_index)) {
        return absl::DataLossError("sentence link names an unknown sentence");
      }
    }
  }
  if (doc.annotations) {
    for (const AnnotatedArticle& a : *doc.annotations) {
      auto it = articles.find(a.article_id);
      if (it == articles.end() || it->second->body != a.body) {
        return absl::DataLossError(
            absl::StrCat("annotation for ", a.article_id, " is stale"));
      }
    }
  }
  return absl::OkStatus();
}

}  // namespace crosscheck::server
