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

#ifndef CROSSCHECK_BACKENDS_HTTP_H_
#define CROSSCHECK_BACKENDS_HTTP_H_

// JSON-over-HTTP model backends.
//
// Failures reach callers as distinct status codes:
//   timeout            -> DeadlineExceeded
//   connection failure -> Unavailable
//   non-2xx reply      -> Aborted, message "HTTP <code>"
//   malformed reply    -> DataLoss

#include <chrono>
#include <memory>
#include <semaphore>
#include <string>

#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "json.hpp"

namespace crosscheck::backends {

enum class HttpFailure { kNone, kTimeout, kConnection, kHttpStatus, kMalformed,
                         kOther };

HttpFailure ClassifyHttpError(const absl::Status& status);

struct HttpClientOptions {
  std::string url;
  // Name of the environment variable holding a bearer token; empty for none.
  std::string api_key_env;
  std::chrono::milliseconds timeout{30000};
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{200};
  int max_in_flight = 4;
};

// Posts JSON bodies to one endpoint. Retries timeouts, connection errors,
// 429 and 5xx with exponential backoff. Safe for concurrent use.
class HttpJsonClient {
 public:
  static absl::StatusOr<std::unique_ptr<HttpJsonClient>> Create(
      HttpClientOptions options);

  absl::StatusOr<nlohmann::json> Post(const nlohmann::json& body);

  const HttpClientOptions& options() const { return options_; }

 private:
  HttpJsonClient(HttpClientOptions options, std::string origin,
                 std::string path, std::string api_key);
  absl::StatusOr<nlohmann::json> PostOnce(const std::string& payload);

  HttpClientOptions options_;
  std::string origin_;
  std::string path_;
  std::string api_key_;
  std::counting_semaphore<> in_flight_;
};

// Request {model, texts}; response {embeddings: [[float]]}.
class HttpEmbeddingBackend : public EmbeddingBackend {
 public:
  HttpEmbeddingBackend(std::unique_ptr<HttpJsonClient> client,
                       std::string model, int dimension, bool normalized);

  absl::StatusOr<std::vector<Embedding>> Embed(
      std::span<const std::string> texts) override;
  int dimension() const override { return dimension_; }
  bool normalized() const override { return normalized_; }

 private:
  std::unique_ptr<HttpJsonClient> client_;
  std::string model_;
  int dimension_;
  bool normalized_;
};

// Request {premise, hypothesis}; response {entailment, contradiction,
// neutral}.
class HttpNliBackend : public NliBackend {
 public:
  HttpNliBackend(std::unique_ptr<HttpJsonClient> client, std::string model);

  absl::StatusOr<NliScores> Classify(std::string_view premise,
                                     std::string_view hypothesis) override;

 private:
  std::unique_ptr<HttpJsonClient> client_;
  std::string model_;
};

// Request {model, prompt, max_tokens, temperature: 0}; response {text} or
// {choices: [{text}]}.
class HttpCompletionBackend : public CompletionBackend {
 public:
  HttpCompletionBackend(std::unique_ptr<HttpJsonClient> client,
                        std::string model, int max_tokens);

  absl::StatusOr<std::string> Complete(std::string_view prompt) override;
  bool deterministic() const override { return false; }

 private:
  std::unique_ptr<HttpJsonClient> client_;
  std::string model_;
  int max_tokens_;
};

}  // namespace crosscheck::backends

#endif  // CROSSCHECK_BACKENDS_HTTP_H_
