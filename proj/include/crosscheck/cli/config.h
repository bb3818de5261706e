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

#ifndef CROSSCHECK_CLI_CONFIG_H_
#define CROSSCHECK_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "absl/status/statusor.h"
#include "crosscheck/backends/config.h"
#include "crosscheck/pairfilter/filter.h"
#include "crosscheck/server/api.h"
#include "json.hpp"

namespace crosscheck::cli {

struct BackendProfile {
  backends::BackendConfig embedding;
  backends::BackendConfig nli;
  backends::BackendConfig completion;
};

// The single configuration document:
//   {
//     "data_dir": "data",
//     "profile": "stub",
//     "profiles": {"<name>": {"embedding": {...}, "nli": {...},
//                             "completion": {...}}},
//     "filter": {"method", "top_k", "cosine_threshold",
//                "jaccard_threshold"},
//     "link": {"cap"},
//     "parallelism": 4,
//     "seed": 0,
//     "server": {"host", "port", "cors_origin"}
//   }
// Every key is optional and unknown keys are rejected at every level. The
// "stub" profile always exists; a file may redefine it.
struct PipelineConfig {
  std::string data_dir;
  std::string profile = "stub";
  std::map<std::string, BackendProfile> profiles;
  pairfilter::FilterConfig filter;
  int cap = 100;
  int parallelism = 4;
  uint64_t seed = 0;
  server::ServerOptions server;

  absl::Status Validate() const;
  absl::StatusOr<BackendProfile> ActiveProfile() const;
};

PipelineConfig DefaultPipelineConfig();
absl::StatusOr<PipelineConfig> ParsePipelineConfig(const nlohmann::json& j);
absl::StatusOr<PipelineConfig> LoadPipelineConfig(
    const std::filesystem::path& path);

// --data-dir, else CROSSCHECK_DATA_DIR, else the config value, else "data".
std::filesystem::path ResolveDataDir(const PipelineConfig& config,
                                     const std::string& flag_value);

}  // namespace crosscheck::cli

#endif  // CROSSCHECK_CLI_CONFIG_H_
