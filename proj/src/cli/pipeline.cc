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

#include "crosscheck/cli/pipeline.h"

#include "absl/strings/str_cat.h"
#include "crosscheck/backends/config.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/claimext/claims.h"
#include "crosscheck/nlilink/link.h"
#include "crosscheck/pairfilter/filter.h"
#include "crosscheck/server/annotate.h"
#include "glog/logging.h"

namespace crosscheck::cli {
namespace {

using server::ClusterDocument;
using server::Json;

enum class Stage { kIngest, kExtract, kFilter, kLink, kAnnotate };

// Drops every stage output after `stage`.
void ClearAfter(Stage stage, ClusterDocument* doc) {
  if (stage < Stage::kExtract) {
    doc->claims.reset();
    doc->provenance.erase("extract");
  }
  if (stage < Stage::kFilter) {
    doc->candidates.reset();
    doc->provenance.erase("filter");
  }
  if (stage < Stage::kLink) {
    doc->links.reset();
    doc->sentence_links.reset();
    doc->provenance.erase("link");
  }
  if (stage < Stage::kAnnotate) {
    doc->annotations.reset();
    doc->provenance.erase("annotate");
  }
}

template <typename T>
void Replace(Stage stage, std::optional<T>* slot, T value,
             ClusterDocument* doc) {
  if (*slot && **slot == value) return;
  const bool had_downstream = stage < Stage::kAnnotate;
  if (*slot && had_downstream) {
    LOG(WARNING) << "stage output changed; clearing later stages of "
                 << doc->cluster.cluster_id;
  }
  *slot = std::move(value);
  ClearAfter(stage, doc);
}

Json BackendJson(const backends::BackendConfig& c) {
  // Key names only; API keys themselves never reach the document.
  return Json::parse(backends::BackendConfigToJson(c).dump());
}

}  // namespace

absl::StatusOr<Backends> MakeBackends(const BackendProfile& profile) {
  Backends b;
  ASSIGN_OR_RETURN(b.embedding, backends::MakeEmbeddingBackend(profile.embedding));
  ASSIGN_OR_RETURN(b.nli, backends::MakeNliBackend(profile.nli));
  ASSIGN_OR_RETURN(b.completion,
                   backends::MakeCompletionBackend(profile.completion));
  return b;
}

Pipeline::Pipeline(PipelineConfig config, server::ClusterStore store)
    : config_(std::move(config)), store_(std::move(store)) {}

absl::StatusOr<ClusterDocument> Pipeline::LoadCluster(
    const std::string& cluster_id) const {
  absl::StatusOr<ClusterDocument> doc = store_.Load(cluster_id);
  if (absl::IsNotFound(doc.status())) {
    return absl::NotFoundError(
        absl::StrCat("cluster '", cluster_id, "' not found; run ingest"));
  }
  return doc;
}

absl::StatusOr<std::string> Pipeline::Ingest(
    const std::filesystem::path& manifest_path, corpus::PageFetcher& fetcher) {
  ASSIGN_OR_RETURN(corpus::Manifest manifest,
                   corpus::LoadManifest(manifest_path));
  ASSIGN_OR_RETURN(
      corpus::CollectedCluster collected,
      corpus::CollectCluster(manifest, fetcher, {config_.parallelism}));
  for (const corpus::FetchFailure& f : collected.failures) {
    LOG(WARNING) << "skipped " << f.source << ": " << f.reason;
  }
  const std::string id = collected.cluster.cluster_id;
  ClusterDocument doc;
  absl::StatusOr<ClusterDocument> existing = store_.Load(id);
  if (existing.ok()) {
    doc = std::move(*existing);
  } else if (!absl::IsNotFound(existing.status())) {
    LOG(WARNING) << "replacing unreadable cluster file: " << existing.status();
  }
  if (doc.cluster != collected.cluster) {
    if (!doc.cluster.cluster_id.empty()) {
      LOG(WARNING) << "cluster " << id << " changed; clearing later stages";
    }
    doc.cluster = std::move(collected.cluster);
    ClearAfter(Stage::kIngest, &doc);
  }
  doc.fetch_failures = std::move(collected.failures);
  RETURN_IF_ERROR(store_.Save(doc));
  return id;
}

absl::Status Pipeline::Extract(const std::string& cluster_id,
                               backends::CompletionBackend& backend) {
  ASSIGN_OR_RETURN(ClusterDocument doc, LoadCluster(cluster_id));
  claimext::ExtractionStats stats;
  std::vector<claimext::Claim> claims = claimext::ExtractClusterClaims(
      doc.cluster, backend, {config_.parallelism}, &stats);
  if (stats.backend_failures > 0) {
    LOG(WARNING) << stats.backend_failures
                 << " sentences fell back to passthrough after backend errors";
  }
  Replace(Stage::kExtract, &doc.claims, std::move(claims), &doc);
  ASSIGN_OR_RETURN(BackendProfile profile, config_.ActiveProfile());
  doc.provenance["extract"] = {
      {"completion", BackendJson(profile.completion)},
      {"deterministic", backend.deterministic()},
      {"sentences", stats.sentences},
      {"llm_sentences", stats.llm_sentences},
      {"passthrough_sentences", stats.passthrough_sentences},
      {"backend_failures", stats.backend_failures},
      {"truncated_claims", stats.truncated_claims}};
  return store_.Save(doc);
}

absl::Status Pipeline::Filter(const std::string& cluster_id,
                              backends::EmbeddingBackend& backend) {
  ASSIGN_OR_RETURN(ClusterDocument doc, LoadCluster(cluster_id));
  if (!doc.claims) {
    return absl::FailedPreconditionError("claims missing; run extract");
  }
  pairfilter::FilterStats stats;
  ASSIGN_OR_RETURN(
      std::vector<pairfilter::CandidatePair> candidates,
      pairfilter::FilterCandidates(*doc.claims, backend, config_.filter,
                                   &stats));
  Replace(Stage::kFilter, &doc.candidates, std::move(candidates), &doc);
  Json record = {
      {"method", pairfilter::FilterMethodName(config_.filter.method)},
      {"cross_article_pairs", stats.cross_article_pairs},
      {"pairs_scored", stats.pairs_scored},
      {"pairs_before_dedup", stats.pairs_before_dedup},
      {"emitted", stats.emitted}};
  if (config_.filter.method == pairfilter::FilterMethod::kEmbeddingSimilarity) {
    ASSIGN_OR_RETURN(BackendProfile profile, config_.ActiveProfile());
    record["embedding"] = BackendJson(profile.embedding);
    record["top_k"] = config_.filter.top_k;
    record["cosine_threshold"] = config_.filter.cosine_threshold;
  } else {
    record["jaccard_threshold"] = config_.filter.jaccard_threshold;
  }
  doc.provenance["filter"] = std::move(record);
  return store_.Save(doc);
}

absl::Status Pipeline::Link(const std::string& cluster_id,
                            backends::NliBackend& backend) {
  ASSIGN_OR_RETURN(ClusterDocument doc, LoadCluster(cluster_id));
  if (!doc.claims) {
    return absl::FailedPreconditionError("claims missing; run extract");
  }
  if (!doc.candidates) {
    return absl::FailedPreconditionError("candidates missing; run filter");
  }
  nlilink::LinkStats stats;
  ASSIGN_OR_RETURN(std::vector<nlilink::ClaimLink> links,
                   nlilink::LinkCandidates(*doc.candidates, *doc.claims,
                                           backend,
                                           {config_.cap, config_.parallelism},
                                           &stats));
  if (stats.skipped > 0) {
    LOG(WARNING) << stats.skipped << " candidate pairs skipped after NLI "
                 << "backend errors";
  }
  ASSIGN_OR_RETURN(std::vector<nlilink::SentenceLink> sentence_links,
                   nlilink::ProjectLinks(links, *doc.claims));
  const bool unchanged = doc.links && *doc.links == links &&
                         doc.sentence_links &&
                         *doc.sentence_links == sentence_links;
  if (!unchanged) {
    doc.links = std::move(links);
    doc.sentence_links = std::move(sentence_links);
    ClearAfter(Stage::kLink, &doc);
  }
  ASSIGN_OR_RETURN(BackendProfile profile, config_.ActiveProfile());
  doc.provenance["link"] = {{"nli", BackendJson(profile.nli)},
                            {"cap", config_.cap},
                            {"candidates", stats.candidates},
                            {"skipped", stats.skipped},
                            {"neutral", stats.neutral},
                            {"entailment_before_cap",
                             stats.entailment_before_cap},
                            {"contradiction_before_cap",
                             stats.contradiction_before_cap},
                            {"entailment", stats.entailment},
                            {"contradiction", stats.contradiction}};
  return store_.Save(doc);
}

absl::Status Pipeline::Annotate(const std::string& cluster_id) {
  ASSIGN_OR_RETURN(ClusterDocument doc, LoadCluster(cluster_id));
  if (!doc.sentence_links) {
    return absl::FailedPreconditionError("sentence links missing; run link");
  }
  ASSIGN_OR_RETURN(std::vector<server::AnnotatedArticle> annotations,
                   server::AnnotateCluster(doc.cluster, *doc.sentence_links));
  Replace(Stage::kAnnotate, &doc.annotations, std::move(annotations), &doc);
  return store_.Save(doc);
}

absl::StatusOr<std::string> Pipeline::Run(
    const std::filesystem::path& manifest, corpus::PageFetcher& fetcher,
    Backends& b) {
  ASSIGN_OR_RETURN(std::string id, Ingest(manifest, fetcher));
  RETURN_IF_ERROR(Extract(id, *b.completion));
  RETURN_IF_ERROR(Filter(id, *b.embedding));
  RETURN_IF_ERROR(Link(id, *b.nli));
  RETURN_IF_ERROR(Annotate(id));
  return id;
}

}  // namespace crosscheck::cli
