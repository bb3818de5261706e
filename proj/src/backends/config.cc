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

#include "crosscheck/backends/config.h"

#include "absl/strings/str_cat.h"
#include "crosscheck/backends/http.h"
#include "crosscheck/backends/stubs.h"
#include "crosscheck/base/status_macros.h"

namespace crosscheck::backends {
namespace {

using nlohmann::json;

template <typename T>
absl::Status Read(const json& value, const std::string& key, T* out) {
  try {
    *out = value.get<T>();
  } catch (const json::exception&) {
    return absl::InvalidArgumentError(
        absl::StrCat("backend key '", key, "' has the wrong type"));
  }
  return absl::OkStatus();
}

absl::StatusOr<HttpClientOptions> ClientOptions(const BackendConfig& c) {
  if (c.url.empty()) {
    return absl::InvalidArgumentError("http backend requires 'url'");
  }
  HttpClientOptions options;
  options.url = c.url;
  options.api_key_env = c.api_key_env;
  options.timeout = std::chrono::milliseconds(c.timeout_ms);
  options.max_retries = c.max_retries;
  options.max_in_flight = c.max_in_flight;
  return options;
}

}  // namespace

absl::StatusOr<BackendConfig> ParseBackendConfig(const json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("backend config must be an object");
  }
  BackendConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      std::string kind;
      RETURN_IF_ERROR(Read(value, key, &kind));
      if (kind == "stub") {
        c.kind = BackendKind::kStub;
      } else if (kind == "http") {
        c.kind = BackendKind::kHttp;
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown backend kind '", kind, "'"));
      }
    } else if (key == "url") {
      RETURN_IF_ERROR(Read(value, key, &c.url));
    } else if (key == "api_key_env") {
      RETURN_IF_ERROR(Read(value, key, &c.api_key_env));
    } else if (key == "model_name") {
      RETURN_IF_ERROR(Read(value, key, &c.model_name));
    } else if (key == "dimension") {
      RETURN_IF_ERROR(Read(value, key, &c.dimension));
    } else if (key == "normalized") {
      RETURN_IF_ERROR(Read(value, key, &c.normalized));
    } else if (key == "timeout_ms") {
      RETURN_IF_ERROR(Read(value, key, &c.timeout_ms));
    } else if (key == "max_retries") {
      RETURN_IF_ERROR(Read(value, key, &c.max_retries));
    } else if (key == "max_in_flight") {
      RETURN_IF_ERROR(Read(value, key, &c.max_in_flight));
    } else if (key == "max_tokens") {
      RETURN_IF_ERROR(Read(value, key, &c.max_tokens));
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown backend key '", key, "'"));
    }
  }
  if (c.dimension < 1) {
    return absl::InvalidArgumentError("dimension must be >= 1");
  }
  if (c.timeout_ms < 1) {
    return absl::InvalidArgumentError("timeout_ms must be >= 1");
  }
  if (c.max_tokens < 1) {
    return absl::InvalidArgumentError("max_tokens must be >= 1");
  }
  return c;
}

json BackendConfigToJson(const BackendConfig& c) {
  return json{{"kind", c.kind == BackendKind::kStub ? "stub" : "http"},
              {"url", c.url},
              {"api_key_env", c.api_key_env},
              {"model_name", c.model_name},
              {"dimension", c.dimension},
              {"normalized", c.normalized},
              {"timeout_ms", c.timeout_ms},
              {"max_retries", c.max_retries},
              {"max_in_flight", c.max_in_flight},
              {"max_tokens", c.max_tokens}};
}

absl::StatusOr<std::unique_ptr<EmbeddingBackend>> MakeEmbeddingBackend(
    const BackendConfig& c) {
  if (c.kind == BackendKind::kStub) {
    return std::make_unique<StubEmbeddingBackend>(c.dimension);
  }
  ASSIGN_OR_RETURN(HttpClientOptions options, ClientOptions(c));
  ASSIGN_OR_RETURN(auto client, HttpJsonClient::Create(std::move(options)));
  return std::make_unique<HttpEmbeddingBackend>(std::move(client),
                                                c.model_name, c.dimension,
                                                c.normalized);
}

absl::StatusOr<std::unique_ptr<NliBackend>> MakeNliBackend(
    const BackendConfig& c) {
  if (c.kind == BackendKind::kStub) return std::make_unique<RuleNliBackend>();
  ASSIGN_OR_RETURN(HttpClientOptions options, ClientOptions(c));
  ASSIGN_OR_RETURN(auto client, HttpJsonClient::Create(std::move(options)));
  return std::make_unique<HttpNliBackend>(std::move(client), c.model_name);
}

absl::StatusOr<std::unique_ptr<CompletionBackend>> MakeCompletionBackend(
    const BackendConfig& c) {
  if (c.kind == BackendKind::kStub) {
    if (c.model_name.empty() || c.model_name == "echo") {
      return std::make_unique<EchoCompletionBackend>();
    }
    if (c.model_name == "exemplar") {
      return std::make_unique<ExemplarCompletionBackend>();
    }
    return absl::InvalidArgumentError(
        absl::StrCat("unknown stub completion model '", c.model_name, "'"));
  }
  ASSIGN_OR_RETURN(HttpClientOptions options, ClientOptions(c));
  ASSIGN_OR_RETURN(auto client, HttpJsonClient::Create(std::move(options)));
  return std::make_unique<HttpCompletionBackend>(std::move(client),
                                                 c.model_name, c.max_tokens);
}

}  // namespace crosscheck::backends
