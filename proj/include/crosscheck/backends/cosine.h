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

#ifndef CROSSCHECK_BACKENDS_COSINE_H_
#define CROSSCHECK_BACKENDS_COSINE_H_

#include <algorithm>
#include <span>

namespace crosscheck::backends {

// dot(u, v) / (|u| |v|), clamped to [-1, 1]. Returns 0 (with a rate-limited
// warning) when either vector is all zeros. Sizes must match.
double CosineSimilarity(std::span<const float> u, std::span<const float> v);

// The final step of CosineSimilarity for callers that precompute norms.
// Using it keeps their scores bitwise identical to CosineSimilarity.
inline double CosineFromParts(double dot, double norm_u, double norm_v) {
  if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
  return std::clamp(dot / (norm_u * norm_v), -1.0, 1.0);
}

// sqrt of the squared L2 norm, as CosineSimilarity computes it.
double L2Norm(std::span<const float> v);

}  // namespace crosscheck::backends

#endif  // CROSSCHECK_BACKENDS_COSINE_H_
