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

#ifndef CROSSCHECK_SERVER_STORE_H_
#define CROSSCHECK_SERVER_STORE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/server/document.h"

namespace crosscheck::server {

// Ids usable in paths and URLs: [A-Za-z0-9_.-]{1,128}, not all dots.
bool IsValidId(std::string_view id);

struct ClusterSummary {
  std::string cluster_id;
  std::string story_title;
  size_t article_count = 0;
};

// One JSON file per cluster under <data_dir>/clusters/. Writers replace
// whole files atomically (temp file + rename), so readers never observe a
// partial document. One writer at a time per cluster.
class ClusterStore {
 public:
  explicit ClusterStore(std::filesystem::path data_dir);

  const std::filesystem::path& data_dir() const { return data_dir_; }
  std::filesystem::path PathFor(std::string_view cluster_id) const;

  // InvalidArgument for a malformed id.
  absl::Status Save(const ClusterDocument& doc) const;

  // InvalidArgument for a malformed id, NotFound if absent, DataLoss if the
  // file does not parse or fails ValidateDocument.
  absl::StatusOr<ClusterDocument> Load(std::string_view cluster_id) const;

  // Sorted by cluster id. Unreadable files are logged and skipped.
  absl::StatusOr<std::vector<ClusterSummary>> List() const;

 private:
  std::filesystem::path data_dir_;
};

// Serialized form written by Save: two-space indented, trailing newline.
std::string SerializeDocument(const ClusterDocument& doc);

}  // namespace crosscheck::server

#endif  // CROSSCHECK_SERVER_STORE_H_
