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

#include "crosscheck/base/url.h"

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "crosscheck/base/strings.h"

namespace crosscheck {

absl::StatusOr<SplitUrl> ParseHttpUrl(std::string_view url) {
  const size_t sep = url.find("://");
  if (sep == std::string_view::npos) {
    return absl::InvalidArgumentError(absl::StrCat("not a URL: ", AbslView(url)));
  }
  const std::string scheme = absl::AsciiStrToLower(AbslView(url.substr(0, sep)));
  if (scheme != "http" && scheme != "https") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported URL scheme: ", scheme));
  }
  const size_t host_start = sep + 3;
  size_t path_start = url.find_first_of("/?#", host_start);
  if (path_start == std::string_view::npos) path_start = url.size();
  if (path_start == host_start) {
    return absl::InvalidArgumentError(absl::StrCat("URL has no host: ", AbslView(url)));
  }
  SplitUrl out;
  out.origin = absl::StrCat(
      scheme, "://", AbslView(url.substr(host_start, path_start - host_start)));
  std::string_view rest = url.substr(path_start);
  if (const size_t hash = rest.find('#'); hash != std::string_view::npos) {
    rest = rest.substr(0, hash);
  }
  out.path = rest.empty() || rest[0] != '/' ? absl::StrCat("/", AbslView(rest))
                                             : std::string(rest);
  return out;
}

}  // namespace crosscheck
