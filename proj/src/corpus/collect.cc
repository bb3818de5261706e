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

#include "crosscheck/corpus/collect.h"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"
#include "crosscheck/base/hash.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/corpus/html_extract.h"
#include "crosscheck/corpus/segmenter.h"
#include "glog/logging.h"
#include "nlohmann/json.hpp"

namespace crosscheck::corpus {
namespace {

using json = nlohmann::json;

constexpr char kTimeFormat[] = "%Y-%m-%dT%H:%M:%SZ";

absl::StatusOr<std::vector<std::string>> StringArray(const json& doc,
                                                     const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const json& value = doc.at(key);
  if (!value.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed manifest: '", key, "' must be an array"));
  }
  for (const json& item : value) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "malformed manifest: '", key, "' entries must be non-empty strings"));
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string HostOf(std::string_view url) {
  size_t start = url.find("://");
  start = start == std::string_view::npos ? 0 : start + 3;
  size_t end = url.find_first_of("/:?#", start);
  if (end == std::string_view::npos) end = url.size();
  std::string host(url.substr(start, end - start));
  if (absl::StartsWith(host, "www.")) host = host.substr(4);
  return host;
}

std::string StemOf(std::string_view path) {
  return std::filesystem::path(path).stem().string();
}

bool ValidTimestamp(const std::string& text) {
  absl::Time t;
  std::string err;
  return absl::ParseTime(absl::RFC3339_full, text, &t, &err);
}

}  // namespace

absl::StatusOr<Manifest> ParseManifest(std::string_view json_text,
                                       const std::filesystem::path& base_dir) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("malformed manifest: not a JSON object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "story_title" && key != "urls" && key != "html_files" &&
        key != "cluster_id" && key != "created_at") {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed manifest: unknown key '", key, "'"));
    }
  }
  Manifest m;
  m.base_dir = base_dir;
  if (!doc.contains("story_title") || !doc["story_title"].is_string()) {
    return absl::InvalidArgumentError(
        "malformed manifest: 'story_title' string is required");
  }
  m.story_title = doc["story_title"].get<std::string>();
  ASSIGN_OR_RETURN(m.urls, StringArray(doc, "urls"));
  ASSIGN_OR_RETURN(m.html_files, StringArray(doc, "html_files"));
  if (m.urls.empty() && m.html_files.empty()) {
    return absl::InvalidArgumentError(
        "malformed manifest: no urls or html_files");
  }
  for (const char* key : {"cluster_id", "created_at"}) {
    if (!doc.contains(key)) continue;
    if (!doc[key].is_string() || doc[key].get<std::string>().empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed manifest: '", key, "' must be a string"));
    }
  }
  if (doc.contains("cluster_id")) {
    m.cluster_id = doc["cluster_id"].get<std::string>();
  }
  if (doc.contains("created_at")) {
    m.created_at = doc["created_at"].get<std::string>();
    if (!ValidTimestamp(*m.created_at)) {
      return absl::InvalidArgumentError(
          "malformed manifest: created_at is not RFC 3339");
    }
  }
  return m;
}

absl::StatusOr<Manifest> LoadManifest(const std::filesystem::path& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseManifest(text, path.parent_path());
}

std::string DeriveClusterId(const Manifest& manifest) {
  std::string slug;
  for (char c : manifest.story_title) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      slug.push_back(absl::ascii_tolower(static_cast<unsigned char>(c)));
    } else if (!slug.empty() && slug.back() != '-') {
      slug.push_back('-');
    }
    if (slug.size() >= 40) break;
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  if (slug.empty()) slug = "story";
  uint64_t h = Fnv1a64(manifest.story_title);
  for (const auto& u : manifest.urls) h = Fnv1a64(u, h ^ 0x75);
  for (const auto& f : manifest.html_files) h = Fnv1a64(f, h ^ 0x66);
  return absl::StrFormat("%s-%08x", slug, static_cast<uint32_t>(h >> 32));
}

absl::StatusOr<std::string> ResolveCreatedAt(const Manifest& manifest) {
  if (manifest.created_at) return *manifest.created_at;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    int64_t seconds;
    if (!absl::SimpleAtoi(epoch, &seconds)) {
      return absl::InvalidArgumentError("SOURCE_DATE_EPOCH is not an integer");
    }
    return absl::FormatTime(kTimeFormat, absl::FromUnixSeconds(seconds),
                            absl::UTCTimeZone());
  }
  return absl::FormatTime(kTimeFormat, absl::Now(), absl::UTCTimeZone());
}

absl::StatusOr<Article> BuildArticle(std::string article_id, std::string url,
                                     std::string_view content,
                                     std::string_view fallback_venue) {
  ASSIGN_OR_RETURN(ExtractedDocument doc, ExtractBody(content));
  Article article;
  article.article_id = std::move(article_id);
  article.url = std::move(url);
  article.venue = doc.venue.empty() ? std::string(fallback_venue) : doc.venue;
  article.title = std::move(doc.title);
  article.body = std::move(doc.body);
  article.sentences = SegmentSentences(article.body);
  if (article.sentences.empty()) {
    return absl::InvalidArgumentError("no sentences in extracted body");
  }
  return article;
}

absl::StatusOr<CollectedCluster> CollectCluster(const Manifest& manifest,
                                                PageFetcher& fetcher,
                                                const CollectOptions& options) {
  struct Source {
    std::string ref;
    bool is_url;
  };
  std::vector<Source> sources;
  for (const auto& u : manifest.urls) sources.push_back({u, true});
  for (const auto& f : manifest.html_files) sources.push_back({f, false});

  std::vector<absl::StatusOr<Article>> results(
      sources.size(), absl::UnknownError("not attempted"));
  std::vector<bool> connection_failure(sources.size(), false);
  ParallelFor(sources.size(), options.parallelism, [&](size_t i) {
    const Source& src = sources[i];
    const std::string id = absl::StrFormat("a%03d", i);
    absl::StatusOr<std::string> content =
        src.is_url ? fetcher.Fetch(src.ref)
                   : ReadFile(manifest.base_dir / src.ref);
    if (!content.ok()) {
      connection_failure[i] = absl::IsUnavailable(content.status());
      results[i] = content.status();
      return;
    }
    results[i] = BuildArticle(id, src.ref, *content,
                              src.is_url ? HostOf(src.ref) : StemOf(src.ref));
  });

  CollectedCluster out;
  out.cluster.story_title = manifest.story_title;
  out.cluster.cluster_id =
      manifest.cluster_id ? *manifest.cluster_id : DeriveClusterId(manifest);
  ASSIGN_OR_RETURN(out.cluster.created_at, ResolveCreatedAt(manifest));
  bool all_connection = true;
  for (size_t i = 0; i < sources.size(); ++i) {
    if (results[i].ok()) {
      out.cluster.articles.push_back(*std::move(results[i]));
      continue;
    }
    all_connection = all_connection && connection_failure[i];
    LOG(WARNING) << "dropping " << sources[i].ref << ": "
                 << results[i].status().message();
    out.failures.push_back(
        {sources[i].ref, std::string(results[i].status().message())});
  }
  if (out.cluster.articles.empty()) {
    if (all_connection) {
      return absl::UnavailableError(absl::StrCat(
          "network unreachable: ", out.failures.front().reason));
    }
    return absl::FailedPreconditionError(absl::StrCat(
        "all articles failed (", out.failures.size(), " sources)"));
  }
  return out;
}

}  // namespace crosscheck::corpus
