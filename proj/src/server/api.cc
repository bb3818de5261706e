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

#include "crosscheck/server/api.h"

#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/strings.h"
#include "glog/logging.h"
#include "httplib.h"

namespace crosscheck::server {
namespace {

ApiResponse Error(int status, std::string_view message) {
  return {status, Json{{"error", message}}};
}

ApiResponse FromStatus(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
      return Error(400, StdView(status.message()));
    case absl::StatusCode::kNotFound:
      return Error(404, StdView(status.message()));
    default:
      LOG(ERROR) << "store error: " << status;
      return Error(500, StdView(status.message()));
  }
}

ApiResponse Clusters(const ClusterStore& store) {
  absl::StatusOr<std::vector<ClusterSummary>> list = store.List();
  if (!list.ok()) return FromStatus(list.status());
  Json out = Json::array();
  for (const ClusterSummary& s : *list) {
    out.push_back({{"cluster_id", s.cluster_id},
                   {"story_title", s.story_title},
                   {"article_count", s.article_count}});
  }
  return {200, out};
}

ApiResponse Articles(const ClusterStore& store, std::string_view cid) {
  absl::StatusOr<ClusterDocument> doc = store.Load(cid);
  if (!doc.ok()) return FromStatus(doc.status());
  Json out = Json::array();
  for (const corpus::Article& a : doc->cluster.articles) {
    out.push_back(ArticleSummaryJson(a));
  }
  return {200, out};
}

ApiResponse Article(const ClusterStore& store, std::string_view cid,
                    std::string_view aid) {
  if (!IsValidId(aid)) {
    return Error(400, absl::StrCat("invalid article id '", AbslView(aid), "'"));
  }
  absl::StatusOr<ClusterDocument> doc = store.Load(cid);
  if (!doc.ok()) return FromStatus(doc.status());
  absl::StatusOr<AnnotatedArticle> annotated = ArticleAnnotation(*doc, aid);
  if (!annotated.ok()) return FromStatus(annotated.status());
  return {200, ToJson(*annotated)};
}

}  // namespace

absl::StatusOr<AnnotatedArticle> ArticleAnnotation(const ClusterDocument& doc,
                                                   std::string_view aid) {
  if (doc.annotations) {
    for (const AnnotatedArticle& a : *doc.annotations) {
      if (a.article_id == aid) return a;
    }
  }
  static const std::vector<nlilink::SentenceLink> kNone;
  return AnnotateArticle(doc.cluster,
                         doc.sentence_links ? *doc.sentence_links : kNone, aid);
}

ApiResponse HandleApiGet(const ClusterStore& store, std::string_view path) {
  std::vector<std::string_view> parts;
  for (absl::string_view p : absl::StrSplit(AbslView(path), '/')) {
    parts.push_back(StdView(p));
  }
  // A leading "/" yields an empty first element; a trailing "/" an empty
  // last one, which is tolerated.
  if (parts.size() > 1 && parts.back().empty()) parts.pop_back();
  if (parts.size() < 3 || !parts[0].empty() || parts[1] != "api") {
    return Error(404, "no such endpoint");
  }
  if (parts.size() == 3 && parts[2] == "health") {
    return {200, Json{{"status", "ok"}}};
  }
  if (parts[2] != "clusters") return Error(404, "no such endpoint");
  if (parts.size() == 3) return Clusters(store);
  if (parts.size() < 5 || parts[4] != "articles" || parts.size() > 6) {
    return Error(404, "no such endpoint");
  }
  if (!IsValidId(parts[3])) {
    return Error(400,
                 absl::StrCat("invalid cluster id '", AbslView(parts[3]), "'"));
  }
  if (parts.size() == 5) return Articles(store, parts[3]);
  return Article(store, parts[3], parts[5]);
}

ApiServer::ApiServer(ClusterStore store, ServerOptions options)
    : store_(std::move(store)),
      options_(std::move(options)),
      http_(std::make_unique<httplib::Server>()) {
  http_->set_default_headers(
      {{"Access-Control-Allow-Origin", options_.cors_origin},
       {"Access-Control-Allow-Methods", "GET, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse r = HandleApiGet(store_, req.path);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  http_->Get(R"(/.*)", handler);
  http_->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

ApiServer::~ApiServer() { Stop(); }

absl::Status ApiServer::Bind() {
  if (options_.port == 0) {
    port_ = http_->bind_to_any_port(options_.host);
  } else if (http_->bind_to_port(options_.host, options_.port)) {
    port_ = options_.port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    return absl::UnavailableError(absl::StrCat(
        "cannot bind ", options_.host, ":", options_.port));
  }
  return absl::OkStatus();
}

absl::Status ApiServer::Run() {
  if (port_ <= 0) return absl::FailedPreconditionError("not bound");
  if (!http_->listen_after_bind()) {
    return absl::InternalError("server stopped with an error");
  }
  return absl::OkStatus();
}

absl::Status ApiServer::Start() {
  if (absl::Status s = Bind(); !s.ok()) return s;
  thread_ = std::thread([this] {
    absl::Status s = Run();
    if (!s.ok()) LOG(ERROR) << s;
  });
  http_->wait_until_ready();
  return absl::OkStatus();
}

void ApiServer::Stop() {
  http_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace crosscheck::server
