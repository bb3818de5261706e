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

#ifndef CROSSCHECK_CORPUS_COLLECT_H_
#define CROSSCHECK_CORPUS_COLLECT_H_

// Building an ArticleCluster from a manifest of URLs and local HTML files.

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/corpus/types.h"

namespace crosscheck::corpus {

// {story_title, urls: [string], html_files: [path]} plus two optional keys
// that pin otherwise generated values: cluster_id and created_at (RFC 3339).
// Unknown keys are rejected.
struct Manifest {
  std::string story_title;
  std::vector<std::string> urls;
  std::vector<std::string> html_files;  // as written in the manifest
  std::optional<std::string> cluster_id;
  std::optional<std::string> created_at;
  std::filesystem::path base_dir;  // html_files resolve against this
};

absl::StatusOr<Manifest> ParseManifest(std::string_view json_text,
                                       const std::filesystem::path& base_dir);
absl::StatusOr<Manifest> LoadManifest(const std::filesystem::path& path);

// Retrieves a page. Implementations must allow concurrent calls.
class PageFetcher {
 public:
  virtual ~PageFetcher() = default;
  // Error codes: kUnavailable when the host cannot be reached, kNotFound or
  // kFailedPrecondition for HTTP error statuses ("HTTP 404").
  virtual absl::StatusOr<std::string> Fetch(const std::string& url) = 0;
};

// Plain HTTP(S) GET with redirects followed.
class HttpPageFetcher : public PageFetcher {
 public:
  explicit HttpPageFetcher(std::chrono::milliseconds timeout =
                               std::chrono::seconds(20))
      : timeout_(timeout) {}
  absl::StatusOr<std::string> Fetch(const std::string& url) override;

 private:
  std::chrono::milliseconds timeout_;
};

struct FetchFailure {
  std::string source;  // URL or file path as written in the manifest
  std::string reason;

  bool operator==(const FetchFailure&) const = default;
};

struct CollectedCluster {
  ArticleCluster cluster;
  std::vector<FetchFailure> failures;
};

struct CollectOptions {
  int parallelism = 4;
};

// Fetches, extracts and segments every manifest source. Sources that fail
// (or yield no sentence) are recorded in `failures`. Errors only when no
// article survives: kUnavailable if every source failed to connect,
// kFailedPrecondition ("all articles failed") otherwise.
//
// Article ids are "a" plus the zero-padded source position (URLs first,
// then files), so they are stable when individual sources fail.
absl::StatusOr<CollectedCluster> CollectCluster(const Manifest& manifest,
                                                PageFetcher& fetcher,
                                                const CollectOptions& options);

// Derived cluster id: slug of the story title plus a short hash of the
// source list.
std::string DeriveClusterId(const Manifest& manifest);

// created_at for a new cluster: the manifest value, else SOURCE_DATE_EPOCH,
// else the current time.
absl::StatusOr<std::string> ResolveCreatedAt(const Manifest& manifest);

// Builds one article from page content: extraction plus segmentation.
absl::StatusOr<Article> BuildArticle(std::string article_id, std::string url,
                                     std::string_view content,
                                     std::string_view fallback_venue);

}  // namespace crosscheck::corpus

#endif  // CROSSCHECK_CORPUS_COLLECT_H_
