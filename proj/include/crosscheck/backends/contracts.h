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

#ifndef CROSSCHECK_BACKENDS_CONTRACTS_H_
#define CROSSCHECK_BACKENDS_CONTRACTS_H_

// The three model interfaces the pipeline depends on. Implementations must
// be safe for concurrent calls.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace crosscheck::backends {

using Embedding = std::vector<float>;

class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;

  // One vector per input, each of dimension(). Identical texts must map to
  // identical vectors.
  virtual absl::StatusOr<std::vector<Embedding>> Embed(
      std::span<const std::string> texts) = 0;

  virtual int dimension() const = 0;
  // When true every vector has unit L2 norm (within 1e-6).
  virtual bool normalized() const = 0;
};

// Probability of each NLI label for (premise, hypothesis).
struct NliScores {
  double entailment = 0.0;
  double contradiction = 0.0;
  double neutral = 0.0;
};

class NliBackend {
 public:
  virtual ~NliBackend() = default;
  virtual absl::StatusOr<NliScores> Classify(std::string_view premise,
                                             std::string_view hypothesis) = 0;
};

class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  virtual absl::StatusOr<std::string> Complete(std::string_view prompt) = 0;
  // False for hosted models whose output may vary between calls.
  virtual bool deterministic() const = 0;
};

// Checks a batch against the embedding contract.
absl::Status ValidateEmbeddings(std::span<const Embedding> vectors,
                                size_t expected_count, int dimension,
                                bool normalized);

// Checks nonnegativity and that the scores sum to 1 within 1e-6.
absl::Status ValidateSimplex(const NliScores& scores);

}  // namespace crosscheck::backends

#endif  // CROSSCHECK_BACKENDS_CONTRACTS_H_
