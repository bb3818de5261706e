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

#ifndef CROSSCHECK_PAIRFILTER_FILTER_H_
#define CROSSCHECK_PAIRFILTER_FILTER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "crosscheck/claimext/claims.h"

namespace crosscheck::pairfilter {

enum class FilterMethod { kEmbeddingSimilarity, kLexicalOverlap };

// "embedding_similarity" / "lexical_overlap".
std::string_view FilterMethodName(FilterMethod method);
// Accepts the full names and the short forms "es" / "leo".
std::optional<FilterMethod> ParseFilterMethod(std::string_view name);

struct FilterConfig {
  FilterMethod method = FilterMethod::kEmbeddingSimilarity;
  double cosine_threshold = 0.3;
  int top_k = 16;
  double jaccard_threshold = 0.1;
  int parallelism = 4;

  absl::Status Validate() const;
};

// Unordered cross-article pair; claim_a < claim_b.
struct CandidatePair {
  std::string claim_a;
  std::string claim_b;
  double score = 0.0;
  FilterMethod method = FilterMethod::kEmbeddingSimilarity;

  bool operator==(const CandidatePair&) const = default;
};

// Output order: score descending, then (claim_a, claim_b).
bool CandidateOrder(const CandidatePair& x, const CandidatePair& y);

struct FilterStats {
  size_t claims = 0;
  size_t articles = 0;
  // Pairs of claims from different articles: what a full comparison costs.
  size_t cross_article_pairs = 0;
  // Directed (claim, neighbour) entries passing the threshold, before the
  // unordered dedup. At most claims * top_k for the embedding filter.
  size_t pairs_before_dedup = 0;
  // Pairs whose score was actually computed.
  size_t pairs_scored = 0;
  size_t emitted = 0;
};

size_t CrossArticlePairCount(std::span<const claimext::Claim> claims);

// For each claim, its top_k cross-article neighbours by cosine (ties by
// claim id), kept when cosine >= cosine_threshold, deduplicated as
// unordered pairs. Fewer than two articles gives an empty result.
absl::StatusOr<std::vector<CandidatePair>> EmbedFilter(
    std::span<const claimext::Claim> claims,
    backends::EmbeddingBackend& backend, const FilterConfig& config,
    FilterStats* stats = nullptr);

// Same selection over precomputed vectors (row i belongs to claims[i]).
absl::StatusOr<std::vector<CandidatePair>> EmbedFilterVectors(
    std::span<const claimext::Claim> claims,
    std::span<const backends::Embedding> vectors, const FilterConfig& config,
    FilterStats* stats = nullptr);

// Sorted, deduplicated stems of the non-stopword tokens.
std::vector<std::string> LexicalTokenSet(std::string_view text);

// |A n B| / |A u B| over LexicalTokenSet; 0 when both sets are empty.
double LexicalOverlapScore(std::string_view a, std::string_view b);

// Jaccard index of two sorted, duplicate-free sequences.
template <typename T>
double JaccardSorted(std::span<const T> a, std::span<const T> b) {
  size_t i = 0, j = 0, inter = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++inter;
      ++i;
      ++j;
    }
  }
  const size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

// All cross-article pairs sharing a stem with Jaccard >= jaccard_threshold.
// Only pairs that meet in the inverted index are scored.
std::vector<CandidatePair> LexicalFilter(
    std::span<const claimext::Claim> claims, const FilterConfig& config,
    FilterStats* stats = nullptr);

// Dispatches on config.method.
absl::StatusOr<std::vector<CandidatePair>> FilterCandidates(
    std::span<const claimext::Claim> claims,
    backends::EmbeddingBackend& backend, const FilterConfig& config,
    FilterStats* stats = nullptr);

}  // namespace crosscheck::pairfilter

#endif  // CROSSCHECK_PAIRFILTER_FILTER_H_
