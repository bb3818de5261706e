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

#ifndef CROSSCHECK_BACKENDS_CONFIG_H_
#define CROSSCHECK_BACKENDS_CONFIG_H_

#include <memory>
#include <string>

#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "json.hpp"

namespace crosscheck::backends {

enum class BackendKind { kStub, kHttp };

// One backend block of the config file:
//   {"kind": "stub"|"http", "url", "api_key_env", "model_name",
//    "dimension", "normalized", "timeout_ms", "max_retries",
//    "max_in_flight", "max_tokens"}
// Unknown keys are rejected. For stub completion backends model_name picks
// the variant: "echo" (default) or "exemplar".
struct BackendConfig {
  BackendKind kind = BackendKind::kStub;
  std::string url;
  std::string api_key_env;
  std::string model_name;
  int dimension = 256;
  bool normalized = true;
  int timeout_ms = 30000;
  int max_retries = 3;
  int max_in_flight = 4;
  int max_tokens = 256;
};

absl::StatusOr<BackendConfig> ParseBackendConfig(const nlohmann::json& j);
nlohmann::json BackendConfigToJson(const BackendConfig& config);

absl::StatusOr<std::unique_ptr<EmbeddingBackend>> MakeEmbeddingBackend(
    const BackendConfig& config);
absl::StatusOr<std::unique_ptr<NliBackend>> MakeNliBackend(
    const BackendConfig& config);
absl::StatusOr<std::unique_ptr<CompletionBackend>> MakeCompletionBackend(
    const BackendConfig& config);

}  // namespace crosscheck::backends

#endif  // CROSSCHECK_BACKENDS_CONFIG_H_
