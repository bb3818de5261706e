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

#ifndef CROSSCHECK_SERVER_API_H_
#define CROSSCHECK_SERVER_API_H_

#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include "absl/status/status.h"
#include "crosscheck/server/document.h"
#include "crosscheck/server/store.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace crosscheck::server {

struct ApiResponse {
  int status = 200;
  Json body;
};

// Read-only JSON API over a ClusterStore:
//   GET /api/health
//   GET /api/clusters
//   GET /api/clusters/{cid}/articles
//   GET /api/clusters/{cid}/articles/{aid}
// Malformed ids give 400, unknown ids 404, unreadable store files 500.
// Error bodies are {"error": message}.
ApiResponse HandleApiGet(const ClusterStore& store, std::string_view path);

// Annotation for one article: the stored one when the annotate stage has
// run, otherwise computed from the stored sentence links (or none).
absl::StatusOr<AnnotatedArticle> ArticleAnnotation(const ClusterDocument& doc,
                                                   std::string_view article_id);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string cors_origin = "*";
};

class ApiServer {
 public:
  ApiServer(ClusterStore store, ServerOptions options);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds the socket; after this port() is the bound port.
  absl::Status Bind();
  int port() const { return port_; }

  // Serves until Stop(). Requires Bind().
  absl::Status Run();

  // Bind() and Run() on a background thread; returns once accepting.
  absl::Status Start();
  void Stop();

 private:
  ClusterStore store_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> http_;
  std::thread thread_;
  int port_ = -1;
};

}  // namespace crosscheck::server

#endif  // CROSSCHECK_SERVER_API_H_
