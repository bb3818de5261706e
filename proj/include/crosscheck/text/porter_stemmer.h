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

#ifndef CROSSCHECK_TEXT_PORTER_STEMMER_H_
#define CROSSCHECK_TEXT_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace crosscheck::text {

// Porter (1980) suffix stripping, steps 1a through 5b, without the later
// irregular-form and short-word extensions. Input must be a lowercase ASCII
// word; anything else is returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace crosscheck::text

#endif  // CROSSCHECK_TEXT_PORTER_STEMMER_H_
