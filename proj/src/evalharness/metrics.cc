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

#include <algorithm>

#include "absl/strings/str_format.h"
#include "crosscheck/backends/cosine.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/evalharness/eval.h"

namespace crosscheck::evalharness {
namespace {

using pairfilter::FilterMethod;

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

FilterMetrics ComputeMetrics(std::span<const Gold> gold,
                             std::span<const bool> retained) {
  FilterMetrics m;
  const size_t n = std::min(gold.size(), retained.size());
  for (size_t i = 0; i < n; ++i) {
    const bool pos = gold[i] == Gold::kPositive;
    if (retained[i]) {
      ++(pos ? m.tp : m.fp);
    } else {
      ++(pos ? m.fn : m.tn);
    }
  }
  m.precision = Ratio(m.tp, m.tp + m.fp);
  m.recall = Ratio(m.tp, m.tp + m.fn);
  m.tnr = Ratio(m.tn, m.tn + m.fp);
  const double f1_pos = Ratio(2 * m.tp, 2 * m.tp + m.fp + m.fn);
  const double f1_neg = Ratio(2 * m.tn, 2 * m.tn + m.fn + m.fp);
  m.macro_f1 = (f1_pos + f1_neg) / 2.0;
  return m;
}

absl::StatusOr<std::vector<double>> ScorePairs(
    std::span<const EvalPair> pairs, FilterMethod method,
    backends::EmbeddingBackend* backend, int parallelism) {
  std::vector<double> scores(pairs.size());
  if (method == FilterMethod::kLexicalOverlap) {
    ParallelFor(pairs.size(), parallelism, [&](size_t i) {
      scores[i] = pairfilter::LexicalOverlapScore(pairs[i].text_a,
                                                  pairs[i].text_b);
    });
    return scores;
  }
  if (backend == nullptr) {
    return absl::InvalidArgumentError(
        "embedding similarity needs an embedding backend");
  }
  constexpr size_t kBatch = 64;
  for (size_t begin = 0; begin < pairs.size(); begin += kBatch) {
    const size_t end = std::min(pairs.size(), begin + kBatch);
    std::vector<std::string> texts;
    for (size_t i = begin; i < end; ++i) {
      texts.push_back(pairs[i].text_a);
      texts.push_back(pairs[i].text_b);
    }
    ASSIGN_OR_RETURN(std::vector<backends::Embedding> vectors,
                     backend->Embed(texts));
    RETURN_IF_ERROR(backends::ValidateEmbeddings(
        vectors, texts.size(), backend->dimension(), backend->normalized()));
    for (size_t i = begin; i < end; ++i) {
      const size_t r = 2 * (i - begin);
      scores[i] = backends::CosineSimilarity(vectors[r], vectors[r + 1]);
    }
  }
  return scores;
}

bool Retains(FilterMethod method, double score, double threshold) {
  if (method == FilterMethod::kLexicalOverlap && score == 0.0) return false;
  return score >= threshold;
}

absl::StatusOr<FilterMetrics> EvaluateFilter(
    std::span<const EvalPair> pairs, const pairfilter::FilterConfig& config,
    backends::EmbeddingBackend* backend) {
  RETURN_IF_ERROR(config.Validate());
  if (pairs.empty()) return absl::InvalidArgumentError("empty eval set");
  ASSIGN_OR_RETURN(std::vector<double> scores,
                   ScorePairs(pairs, config.method, backend,
                              config.parallelism));
  const double threshold =
      config.method == FilterMethod::kEmbeddingSimilarity
          ? config.cosine_threshold
          : config.jaccard_threshold;
  std::vector<Gold> gold;
  std::vector<bool> retained_bits;
  for (size_t i = 0; i < pairs.size(); ++i) {
    gold.push_back(pairs[i].gold);
    retained_bits.push_back(Retains(config.method, scores[i], threshold));
  }
  // std::vector<bool> is not contiguous; copy into a plain array.
  std::unique_ptr<bool[]> retained(new bool[retained_bits.size()]);
  std::copy(retained_bits.begin(), retained_bits.end(), retained.get());
  return ComputeMetrics(gold, std::span<const bool>(retained.get(),
                                                    retained_bits.size()));
}

nlohmann::json MetricsToJson(const FilterMetrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall},
          {"macro_f1", m.macro_f1},   {"tnr", m.tnr},
          {"tp", m.tp},               {"fp", m.fp},
          {"tn", m.tn},               {"fn", m.fn}};
}

std::string MetricsTable(std::string_view label, const FilterMetrics& m) {
  std::string out = absl::StrFormat(
      "%-22s %9s %9s %9s %9s\n", "method", "precision", "recall", "macro-F1",
      "TNR");
  absl::StrAppendFormat(&out, "%-22s %9.4f %9.4f %9.4f %9.4f\n",
                        AbslView(label), m.precision, m.recall, m.macro_f1,
                        m.tnr);
  absl::StrAppendFormat(&out, "tp=%d fp=%d tn=%d fn=%d (n=%d)\n", m.tp, m.fp,
                        m.tn, m.fn, m.tp + m.fp + m.tn + m.fn);
  return out;
}

}  // namespace crosscheck::evalharness
