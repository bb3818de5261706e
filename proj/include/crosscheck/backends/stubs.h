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

#ifndef CROSSCHECK_BACKENDS_STUBS_H_
#define CROSSCHECK_BACKENDS_STUBS_H_

// Deterministic, dependency-free backends. They let the whole pipeline run
// offline and give tests exact expected values. All are pure functions of
// their inputs.

#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "crosscheck/backends/contracts.h"

namespace crosscheck::backends {

// Feature-hashed bag of stemmed content words, L2-normalized.
//
// Every stem adds +/-1 to two buckets chosen by independent hashes, so two
// texts collide only if both bucket choices coincide. Texts without content
// words fall back to their raw tokens; a text with no tokens at all gets a
// fixed unit vector.
class StubEmbeddingBackend : public EmbeddingBackend {
 public:
  static constexpr int kDefaultDimension = 256;

  explicit StubEmbeddingBackend(int dimension = kDefaultDimension);

  absl::StatusOr<std::vector<Embedding>> Embed(
      std::span<const std::string> texts) override;
  int dimension() const override { return dimension_; }
  bool normalized() const override { return true; }

  Embedding EmbedOne(std::string_view text) const;

 private:
  int dimension_;
};

// exact match -> entailment; one inserted or removed negation
// ("not", "no", "never", "n't") -> contradiction; otherwise neutral.
// Comparison is over lowercased word tokens, so case and punctuation are
// ignored. Verdicts are one-hot.
class RuleNliBackend : public NliBackend {
 public:
  absl::StatusOr<NliScores> Classify(std::string_view premise,
                                     std::string_view hypothesis) override;
};

// Returns the sentence from the prompt's final "Sentence:" slot, with no
// "Claim:" lines, so claim extraction falls back to passthrough.
class EchoCompletionBackend : public CompletionBackend {
 public:
  absl::StatusOr<std::string> Complete(std::string_view prompt) override;
  bool deterministic() const override { return true; }
};

// Answers from the few-shot exemplars embedded in the prompt itself: if
// the final sentence matches an exemplar's sentence, returns that
// exemplar's "Claim:" lines; otherwise behaves like EchoCompletionBackend.
class ExemplarCompletionBackend : public CompletionBackend {
 public:
  absl::StatusOr<std::string> Complete(std::string_view prompt) override;
  bool deterministic() const override { return true; }
};

// Splits a few-shot prompt into its exemplar sentences (quotes removed) and
// the "Claim:" block that follows each. The final, unanswered slot is
// returned separately.
struct ParsedPrompt {
  std::vector<std::pair<std::string, std::string>> exemplars;
  std::string query;
};
ParsedPrompt ParseFewShotPrompt(std::string_view prompt);

// Lowercased word tokens with "n't" contractions split into stem + "not".
std::vector<std::string> NliTokens(std::string_view text);

}  // namespace crosscheck::backends

#endif  // CROSSCHECK_BACKENDS_STUBS_H_
