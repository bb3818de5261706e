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

#include "crosscheck/backends/contracts.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "crosscheck/backends/cosine.h"
#include "crosscheck/simd/kernels.h"
#include "glog/logging.h"

namespace crosscheck::backends {

absl::Status ValidateEmbeddings(std::span<const Embedding> vectors,
                                size_t expected_count, int dimension,
                                bool normalized) {
  if (vectors.size() != expected_count) {
    return absl::DataLossError(absl::StrCat("embedding backend returned ",
                                            vectors.size(), " vectors for ",
                                            expected_count, " texts"));
  }
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != static_cast<size_t>(dimension)) {
      return absl::InvalidArgumentError(
          absl::StrCat("embedding dimension mismatch: vector ", i, " has ",
                       vectors[i].size(), ", expected ", dimension));
    }
    if (normalized && std::abs(L2Norm(vectors[i]) - 1.0) > 1e-6) {
      return absl::DataLossError(
          absl::StrCat("vector ", i, " is not unit-normalized"));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateSimplex(const NliScores& s) {
  if (!(s.entailment >= 0.0 && s.contradiction >= 0.0 && s.neutral >= 0.0)) {
    return absl::DataLossError("NLI scores must be nonnegative");
  }
  const double sum = s.entailment + s.contradiction + s.neutral;
  if (std::abs(sum - 1.0) > 1e-6) {
    return absl::DataLossError(
        absl::StrCat("NLI scores sum to ", sum, ", expected 1"));
  }
  return absl::OkStatus();
}

double L2Norm(std::span<const float> v) {
  return std::sqrt(simd::SquaredNorm(v));
}

double CosineSimilarity(std::span<const float> u, std::span<const float> v) {
  CHECK_EQ(u.size(), v.size()) << "cosine of vectors with different sizes";
  const double nu = L2Norm(u);
  const double nv = L2Norm(v);
  if (nu == 0.0 || nv == 0.0) {
    LOG_EVERY_N(WARNING, 1000) << "cosine similarity of a zero vector; "
                                  "treating as 0";
    return 0.0;
  }
  return CosineFromParts(simd::Dot(u, v), nu, nv);
}

}  // namespace crosscheck::backends
