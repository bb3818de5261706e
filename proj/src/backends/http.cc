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

#include "crosscheck/backends/http.h"

#include <cstdlib>
#include <thread>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/url.h"
#include "glog/logging.h"
#include "httplib.h"

namespace crosscheck::backends {
namespace {

using nlohmann::json;

bool Retryable(const absl::Status& status) {
  switch (ClassifyHttpError(status)) {
    case HttpFailure::kTimeout:
    case HttpFailure::kConnection:
      return true;
    case HttpFailure::kHttpStatus: {
      absl::string_view msg = status.message();
      return absl::StartsWith(msg, "HTTP 429") ||
             absl::StartsWith(msg, "HTTP 5");
    }
    default:
      return false;
  }
}

absl::Status Malformed(absl::string_view what) {
  return absl::DataLossError(absl::StrCat("malformed response: ", what));
}

// Releases a semaphore slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& sem_;
};

absl::StatusOr<double> Probability(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_number()) {
    return Malformed(absl::StrCat("missing number '", key, "'"));
  }
  return it->get<double>();
}

}  // namespace

HttpFailure ClassifyHttpError(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return HttpFailure::kNone;
    case absl::StatusCode::kDeadlineExceeded:
      return HttpFailure::kTimeout;
    case absl::StatusCode::kUnavailable:
      return HttpFailure::kConnection;
    case absl::StatusCode::kAborted:
      return HttpFailure::kHttpStatus;
    case absl::StatusCode::kDataLoss:
      return HttpFailure::kMalformed;
    default:
      return HttpFailure::kOther;
  }
}

absl::StatusOr<std::unique_ptr<HttpJsonClient>> HttpJsonClient::Create(
    HttpClientOptions options) {
  ASSIGN_OR_RETURN(SplitUrl parts, ParseHttpUrl(options.url));
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (parts.origin.starts_with("https")) {
    return absl::UnimplementedError("built without TLS support");
  }
#endif
  if (options.max_in_flight < 1) {
    return absl::InvalidArgumentError("max_in_flight must be >= 1");
  }
  if (options.max_retries < 0) {
    return absl::InvalidArgumentError("max_retries must be >= 0");
  }
  std::string key;
  if (!options.api_key_env.empty()) {
    const char* value = std::getenv(options.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      return absl::FailedPreconditionError(
          absl::StrCat("environment variable ", options.api_key_env,
                       " is not set"));
    }
    key = value;
  }
  return std::unique_ptr<HttpJsonClient>(
      new HttpJsonClient(std::move(options), std::move(parts.origin),
                         std::move(parts.path), std::move(key)));
}

HttpJsonClient::HttpJsonClient(HttpClientOptions options, std::string origin,
                               std::string path, std::string api_key)
    : options_(std::move(options)),
      origin_(std::move(origin)),
      path_(std::move(path)),
      api_key_(std::move(api_key)),
      in_flight_(options_.max_in_flight) {}

absl::StatusOr<json> HttpJsonClient::PostOnce(const std::string& payload) {
  httplib::Client client(origin_);
  const auto timeout = options_.timeout;
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }
  httplib::Result res = [&] {
    SlotGuard slot(in_flight_);
    return client.Post(path_, headers, payload, "application/json");
  }();
  if (!res) {
    const httplib::Error err = res.error();
    const std::string what = httplib::to_string(err);
    if (err == httplib::Error::ConnectionTimeout ||
        err == httplib::Error::Read) {
      // httplib reports an expired read timeout as a read error.
      return absl::DeadlineExceededError(absl::StrCat(origin_, ": ", what));
    }
    return absl::UnavailableError(absl::StrCat(origin_, ": ", what));
  }
  if (res->status < 200 || res->status >= 300) {
    return absl::AbortedError(absl::StrCat("HTTP ", res->status));
  }
  json body = json::parse(res->body, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded()) return Malformed("body is not JSON");
  return body;
}

absl::StatusOr<json> HttpJsonClient::Post(const json& body) {
  const std::string payload = body.dump();
  auto backoff = options_.initial_backoff;
  absl::StatusOr<json> result;
  for (int attempt = 0;; ++attempt) {
    result = PostOnce(payload);
    if (result.ok() || !Retryable(result.status()) ||
        attempt >= options_.max_retries) {
      break;
    }
    LOG(WARNING) << "retrying " << origin_ << path_ << " after "
                 << result.status().message();
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
  return result;
}

HttpEmbeddingBackend::HttpEmbeddingBackend(
    std::unique_ptr<HttpJsonClient> client, std::string model, int dimension,
    bool normalized)
    : client_(std::move(client)),
      model_(std::move(model)),
      dimension_(dimension),
      normalized_(normalized) {}

absl::StatusOr<std::vector<Embedding>> HttpEmbeddingBackend::Embed(
    std::span<const std::string> texts) {
  if (texts.empty()) return std::vector<Embedding>{};
  json request = {{"model", model_},
                  {"texts", std::vector<std::string>(texts.begin(),
                                                     texts.end())}};
  ASSIGN_OR_RETURN(json body, client_->Post(request));
  auto it = body.find("embeddings");
  if (it == body.end() || !it->is_array()) {
    return Malformed("missing array 'embeddings'");
  }
  std::vector<Embedding> out;
  out.reserve(it->size());
  for (const json& row : *it) {
    if (!row.is_array()) return Malformed("embedding is not an array");
    Embedding v;
    v.reserve(row.size());
    for (const json& x : row) {
      if (!x.is_number()) return Malformed("non-numeric embedding entry");
      v.push_back(x.get<float>());
    }
    out.push_back(std::move(v));
  }
  absl::Status valid =
      ValidateEmbeddings(out, texts.size(), dimension_, normalized_);
  if (!valid.ok()) return Malformed(valid.message());
  return out;
}

HttpNliBackend::HttpNliBackend(std::unique_ptr<HttpJsonClient> client,
                               std::string model)
    : client_(std::move(client)), model_(std::move(model)) {}

absl::StatusOr<NliScores> HttpNliBackend::Classify(
    std::string_view premise, std::string_view hypothesis) {
  json request = {{"premise", premise}, {"hypothesis", hypothesis}};
  if (!model_.empty()) request["model"] = model_;
  ASSIGN_OR_RETURN(json body, client_->Post(request));
  NliScores scores;
  ASSIGN_OR_RETURN(scores.entailment, Probability(body, "entailment"));
  ASSIGN_OR_RETURN(scores.contradiction, Probability(body, "contradiction"));
  ASSIGN_OR_RETURN(scores.neutral, Probability(body, "neutral"));
  absl::Status valid = ValidateSimplex(scores);
  if (!valid.ok()) return Malformed(valid.message());
  return scores;
}

HttpCompletionBackend::HttpCompletionBackend(
    std::unique_ptr<HttpJsonClient> client, std::string model, int max_tokens)
    : client_(std::move(client)),
      model_(std::move(model)),
      max_tokens_(max_tokens) {}

absl::StatusOr<std::string> HttpCompletionBackend::Complete(
    std::string_view prompt) {
  json request = {{"model", model_},
                  {"prompt", prompt},
                  {"max_tokens", max_tokens_},
                  {"temperature", 0}};
  ASSIGN_OR_RETURN(json body, client_->Post(request));
  if (auto it = body.find("text"); it != body.end() && it->is_string()) {
    return it->get<std::string>();
  }
  if (auto it = body.find("choices");
      it != body.end() && it->is_array() && !it->empty()) {
    const json& first = it->front();
    if (auto t = first.find("text"); t != first.end() && t->is_string()) {
      return t->get<std::string>();
    }
  }
  return Malformed("no completion text");
}

}  // namespace crosscheck::backends
