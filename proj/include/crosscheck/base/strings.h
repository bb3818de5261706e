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

#ifndef CROSSCHECK_BASE_STRINGS_H_
#define CROSSCHECK_BASE_STRINGS_H_

// The system absl is built with its own string_view class rather than an
// alias for std::string_view. These adapters cross the boundary without
// copying.

#include <string_view>

#include "absl/strings/string_view.h"

namespace crosscheck {

inline absl::string_view AbslView(std::string_view s) {
  return absl::string_view(s.data(), s.size());
}

inline std::string_view StdView(absl::string_view s) {
  return std::string_view(s.data(), s.size());
}

}  // namespace crosscheck

#endif  // CROSSCHECK_BASE_STRINGS_H_
