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

#ifndef CROSSCHECK_BASE_URL_H_
#define CROSSCHECK_BASE_URL_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace crosscheck {

// "https://host:8080/a/b?q=1" -> {"https://host:8080", "/a/b?q=1"}.
struct SplitUrl {
  std::string origin;
  std::string path;
};

absl::StatusOr<SplitUrl> ParseHttpUrl(std::string_view url);

}  // namespace crosscheck

#endif  // CROSSCHECK_BASE_URL_H_
