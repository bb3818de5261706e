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

#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/url.h"
#include "crosscheck/corpus/collect.h"
#include "httplib.h"

namespace crosscheck::corpus {

absl::StatusOr<std::string> HttpPageFetcher::Fetch(const std::string& url) {
  ASSIGN_OR_RETURN(SplitUrl parts, ParseHttpUrl(url));
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (parts.origin.starts_with("https")) {
    return absl::UnimplementedError("built without TLS support");
  }
#endif
  httplib::Client client(parts.origin);
  client.set_follow_location(true);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_default_headers({{"User-Agent", "crosscheck/1.0"}});
  httplib::Result res = client.Get(parts.path);
  if (!res) {
    return absl::UnavailableError(
        absl::StrCat(url, ": ", httplib::to_string(res.error())));
  }
  if (res->status == 404 || res->status == 410) {
    return absl::NotFoundError(absl::StrCat("HTTP ", res->status));
  }
  if (res->status < 200 || res->status >= 300) {
    return absl::FailedPreconditionError(absl::StrCat("HTTP ", res->status));
  }
  return std::move(res->body);
}

}  // namespace crosscheck::corpus
