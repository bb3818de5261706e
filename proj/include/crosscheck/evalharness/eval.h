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

#ifndef CROSSCHECK_EVALHARNESS_EVAL_H_
#define CROSSCHECK_EVALHARNESS_EVAL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "crosscheck/nlilink/link.h"
#include "crosscheck/pairfilter/filter.h"
#include "json.hpp"

namespace crosscheck::evalharness {

// One labelled premise/hypothesis pair from an NLI corpus.
struct NliExample {
  std::string premise;
  std::string hypothesis;
  nlilink::NliLabel label = nlilink::NliLabel::kNeutral;

  bool operator==(const NliExample&) const = default;
};

// Tab-separated with a header row. Column names follow either
// premise/hypothesis/label or the sentence1/sentence2/gold_label layout of
// the common NLI releases. Rows whose label is unusable ("-", "", -1) are
// skipped.
absl::StatusOr<std::vector<NliExample>> ParseNliTsv(std::string_view text);

// One JSON object per line with the same key choices as ParseNliTsv.
absl::StatusOr<std::vector<NliExample>> ParseNliJsonl(std::string_view text);

// Picks the parser from the extension (.jsonl/.json vs anything else).
absl::StatusOr<std::vector<NliExample>> LoadNliFile(const std::string& path);

// Label names, or integer ids in the 0=entailment, 1=neutral,
// 2=contradiction convention. nullopt for unlabelled rows.
std::optional<nlilink::NliLabel> ParseLabel(std::string_view value);

enum class Gold { kPositive, kNegative };

struct EvalPair {
  std::string text_a;
  std::string text_b;
  Gold gold = Gold::kPositive;

  bool operator==(const EvalPair&) const = default;
};

struct EvalSetOptions {
  size_t n_negatives = 0;
  uint64_t seed = 0;
  // When set, positives are a seeded sample of this size (file order kept).
  std::optional<size_t> max_positives;
};

// Positives: entailment and contradiction pairs. Negatives: pairs of two
// different premise texts drawn uniformly with the seed, no pair repeated.
// Positives come first, then negatives.
absl::StatusOr<std::vector<EvalPair>> BuildEvalSet(
    std::span<const NliExample> examples, const EvalSetOptions& options);

struct FilterMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double macro_f1 = 0.0;
  double tnr = 0.0;
  size_t tp = 0;
  size_t fp = 0;
  size_t tn = 0;
  size_t fn = 0;

  bool operator==(const FilterMetrics&) const = default;
};

// Metrics from per-pair gold labels and retain decisions. Ratios with a
// zero denominator are 0. macro_f1 averages the F1 of the positive and the
// negative class.
FilterMetrics ComputeMetrics(std::span<const Gold> gold,
                             std::span<const bool> retained);

// Score each pair as the filter would: cosine for embedding similarity,
// Jaccard for lexical overlap. `backend` may be null for lexical overlap.
absl::StatusOr<std::vector<double>> ScorePairs(
    std::span<const EvalPair> pairs, pairfilter::FilterMethod method,
    backends::EmbeddingBackend* backend, int parallelism = 4);

// A pair is retained iff score >= threshold; lexical overlap additionally
// requires a shared stem, as the inverted index does.
bool Retains(pairfilter::FilterMethod method, double score, double threshold);

absl::StatusOr<FilterMetrics> EvaluateFilter(
    std::span<const EvalPair> pairs, const pairfilter::FilterConfig& config,
    backends::EmbeddingBackend* backend);

nlohmann::json MetricsToJson(const FilterMetrics& m);
std::string MetricsTable(std::string_view label, const FilterMetrics& m);

}  // namespace crosscheck::evalharness

#endif  // CROSSCHECK_EVALHARNESS_EVAL_H_
