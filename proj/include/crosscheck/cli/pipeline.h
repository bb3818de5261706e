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

#ifndef CROSSCHECK_CLI_PIPELINE_H_
#define CROSSCHECK_CLI_PIPELINE_H_

// The pipeline stages over a cluster store. Each stage reads the cluster
// document, replaces its own output and writes the document back. When a
// stage's output changes, outputs of later stages are dropped (they would
// describe the old data); re-running a stage with identical output leaves
// everything else untouched.

#include <filesystem>
#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "crosscheck/cli/config.h"
#include "crosscheck/corpus/collect.h"
#include "crosscheck/server/store.h"

namespace crosscheck::cli {

struct Backends {
  std::unique_ptr<backends::EmbeddingBackend> embedding;
  std::unique_ptr<backends::NliBackend> nli;
  std::unique_ptr<backends::CompletionBackend> completion;
};

absl::StatusOr<Backends> MakeBackends(const BackendProfile& profile);

class Pipeline {
 public:
  Pipeline(PipelineConfig config, server::ClusterStore store);

  const PipelineConfig& config() const { return config_; }
  const server::ClusterStore& store() const { return store_; }

  // Collects the manifest's sources and stores the cluster. Returns its id.
  absl::StatusOr<std::string> Ingest(const std::filesystem::path& manifest,
                                     corpus::PageFetcher& fetcher);
  absl::Status Extract(const std::string& cluster_id,
                       backends::CompletionBackend& backend);
  absl::Status Filter(const std::string& cluster_id,
                      backends::EmbeddingBackend& backend);
  absl::Status Link(const std::string& cluster_id,
                    backends::NliBackend& backend);
  absl::Status Annotate(const std::string& cluster_id);

  // All stages in order. Returns the cluster id.
  absl::StatusOr<std::string> Run(const std::filesystem::path& manifest,
                                  corpus::PageFetcher& fetcher,
                                  Backends& backends);

 private:
  absl::StatusOr<server::ClusterDocument> LoadCluster(
      const std::string& cluster_id) const;

  PipelineConfig config_;
  server::ClusterStore store_;
};

}  // namespace crosscheck::cli

#endif  // CROSSCHECK_CLI_PIPELINE_H_
