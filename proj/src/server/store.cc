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

#include "crosscheck/server/store.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/strings.h"
#include "glog/logging.h"

namespace crosscheck::server {
namespace {

namespace fs = std::filesystem;

absl::Status WriteAtomically(const fs::path& path, const std::string& data) {
  static std::atomic<uint64_t> counter{0};
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    return absl::InternalError(absl::StrCat(
        "cannot create ", path.parent_path().string(), ": ", ec.message()));
  }
  const fs::path tmp = path.parent_path() /
                       absl::StrCat(".", path.filename().string(), ".tmp.",
                                    ::getpid(), ".", counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << data;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      return absl::InternalError(absl::StrCat("cannot write ", tmp.string()));
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return absl::InternalError(
        absl::StrCat("cannot replace ", path.string(), ": ", ec.message()));
  }
  return absl::OkStatus();
}

}  // namespace

bool IsValidId(std::string_view id) {
  if (id.empty() || id.size() > 128) return false;
  bool all_dots = true;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
    if (!ok) return false;
    all_dots = all_dots && c == '.';
  }
  return !all_dots;
}

ClusterStore::ClusterStore(fs::path data_dir) : data_dir_(std::move(data_dir)) {}

fs::path ClusterStore::PathFor(std::string_view cluster_id) const {
  return data_dir_ / "clusters" / absl::StrCat(AbslView(cluster_id), ".json");
}

std::string SerializeDocument(const ClusterDocument& doc) {
  return ToJson(doc).dump(2) + "\n";
}

absl::Status ClusterStore::Save(const ClusterDocument& doc) const {
  if (!IsValidId(doc.cluster.cluster_id)) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid cluster id '", doc.cluster.cluster_id, "'"));
  }
  return WriteAtomically(PathFor(doc.cluster.cluster_id),
                         SerializeDocument(doc));
}

absl::StatusOr<ClusterDocument> ClusterStore::Load(
    std::string_view cluster_id) const {
  if (!IsValidId(cluster_id)) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid cluster id '", AbslView(cluster_id), "'"));
  }
  const fs::path path = PathFor(cluster_id);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("no cluster '", AbslView(cluster_id), "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json j = Json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return absl::DataLossError(absl::StrCat(path.string(), " is not JSON"));
  }
  ASSIGN_OR_RETURN(ClusterDocument doc, DocumentFromJson(j));
  if (doc.cluster.cluster_id != cluster_id) {
    return absl::DataLossError(
        absl::StrCat(path.string(), " holds cluster ", doc.cluster.cluster_id));
  }
  RETURN_IF_ERROR(ValidateDocument(doc));
  return doc;
}

absl::StatusOr<std::vector<ClusterSummary>> ClusterStore::List() const {
  std::vector<ClusterSummary> out;
  const fs::path dir = data_dir_ / "clusters";
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    const fs::path& p = entry.path();
    const std::string name = p.filename().string();
    if (p.extension() != ".json" || name.starts_with(".")) continue;
    const std::string id = p.stem().string();
    if (IsValidId(id)) ids.push_back(id);
  }
  if (ec) return absl::InternalError(absl::StrCat("cannot list ", dir.string()));
  std::sort(ids.begin(), ids.end());
  for (const std::string& id : ids) {
    // One unreadable file should not hide the rest of the store.
    absl::StatusOr<ClusterDocument> doc = Load(id);
    if (!doc.ok()) {
      LOG(WARNING) << "skipping cluster '" << id << "': " << doc.status();
      continue;
    }
    out.push_back({doc->cluster.cluster_id, doc->cluster.story_title,
                   doc->cluster.articles.size()});
  }
  return out;
}

}  // namespace crosscheck::server
