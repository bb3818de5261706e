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

#ifndef CROSSCHECK_CLAIMEXT_CLAIMS_H_
#define CROSSCHECK_CLAIMEXT_CLAIMS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscheck/backends/contracts.h"
#include "crosscheck/corpus/types.h"

namespace crosscheck::claimext {

enum class ExtractionMethod { kLlm, kPassthrough };

std::string_view ExtractionMethodName(ExtractionMethod method);
std::optional<ExtractionMethod> ParseExtractionMethod(std::string_view name);

// An atomic proposition tied to the sentence it came from.
struct Claim {
  std::string claim_id;
  std::string article_id;
  int sentence_index = 0;
  std::string text;
  ExtractionMethod extraction_method = ExtractionMethod::kLlm;

  bool operator==(const Claim&) const = default;
};

// "a001-s0007-c02". Zero padding keeps lexicographic order equal to
// document order for clusters under 10,000 sentences per article.
std::string MakeClaimId(std::string_view article_id, int sentence_index,
                        int claim_index);

inline constexpr size_t kMaxClaimChars = 500;
inline constexpr std::string_view kSentenceSlot = "<INSERT SENTENCE HERE>";

// The few-shot prompt template, verbatim.
std::string_view ClaimPromptTemplate();

// Fills the template's sentence slot with `sentence` in double quotes,
// matching how the exemplars are written.
std::string BuildClaimPrompt(std::string_view sentence);

// Text after each "Claim:" line prefix, trimmed, in order, with
// case-insensitive duplicates and empty claims dropped.
std::vector<std::string> ParseClaimList(std::string_view completion);

// Inverse of ParseClaimList for its own output.
std::string FormatClaimList(const std::vector<std::string>& claims);

// Cuts `text` to at most `max_chars` code points, preferring the last
// whitespace boundary. Returns nullopt if no cut was needed.
std::optional<std::string> TruncateAtWord(std::string_view text,
                                          size_t max_chars);

struct ExtractionStats {
  int sentences = 0;
  int llm_sentences = 0;
  int passthrough_sentences = 0;
  int backend_failures = 0;
  int truncated_claims = 0;

  ExtractionStats& operator+=(const ExtractionStats& other);
};

// Claims for one sentence. Never fails: a backend error or an empty parse
// yields one passthrough claim equal to the sentence text.
std::vector<Claim> ExtractClaims(std::string_view article_id,
                                 const corpus::Sentence& sentence,
                                 backends::CompletionBackend& backend,
                                 ExtractionStats* stats = nullptr);

struct ExtractOptions {
  int parallelism = 4;
};

// Claims for every sentence of every article, in article, sentence and
// claim order regardless of how calls interleave.
std::vector<Claim> ExtractClusterClaims(const corpus::ArticleCluster& cluster,
                                        backends::CompletionBackend& backend,
                                        const ExtractOptions& options = {},
                                        ExtractionStats* stats = nullptr);

}  // namespace crosscheck::claimext

#endif  // CROSSCHECK_CLAIMEXT_CLAIMS_H_
