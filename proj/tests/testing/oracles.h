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


#ifndef CROSSCHECK_TESTS_TESTING_ORACLES_H_
#define CROSSCHECK_TESTS_TESTING_ORACLES_H_

// Brute-force reference computations shared by unit and acceptance tests.
// They deliberately avoid the production fast paths: no inverted index, no
// partial sort, no precomputed norms.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_format.h"
#include "crosscheck/backends/contracts.h"
#include "crosscheck/backends/cosine.h"
#include "crosscheck/base/random.h"
#include "crosscheck/claimext/claims.h"
#include "crosscheck/evalharness/eval.h"
#include "crosscheck/pairfilter/filter.h"

namespace crosscheck::testing {

// Claims drawn from a small vocabulary so that shared tokens, exact
// duplicates and score ties all occur.
inline std::vector<claimext::Claim> RandomClaims(uint64_t seed,
                                                 int articles,
                                                 int per_article) {
  static const char* const kWords[] = {
      "train",   "derailed", "ohio",    "residents", "evacuated", "chemical",
      "fire",    "burned",   "vinyl",   "officials", "confirmed", "water",
      "safe",    "river",    "fish",    "died",      "company",   "paid",
      "relief",  "governor", "visited", "town",      "crews",     "cleanup",
      "soil",    "tested",   "air",     "monitored", "the",       "a",
      "of",      "was",      "were",    "not",       "and",       "in"};
  constexpr size_t kVocab = sizeof(kWords) / sizeof(kWords[0]);
  SeededRng rng(seed);
  std::vector<claimext::Claim> claims;
  std::vector<std::string> earlier;
  for (int a = 0; a < articles; ++a) {
    const std::string article_id = absl::StrFormat("a%03d", a);
    for (int s = 0; s < per_article; ++s) {
      std::string text;
      if (!earlier.empty() && rng.UniformIndex(8) == 0) {
        text = earlier[rng.UniformIndex(earlier.size())];
      } else {
        const size_t len = 2 + rng.UniformIndex(7);
        for (size_t w = 0; w < len; ++w) {
          if (w > 0) text += ' ';
          text += kWords[rng.UniformIndex(kVocab)];
        }
        text += '.';
      }
      earlier.push_back(text);
      claims.push_back({claimext::MakeClaimId(article_id, s, 0), article_id, s,
                        text, claimext::ExtractionMethod::kLlm});
    }
  }
  return claims;
}

using PairSet = std::set<std::pair<std::string, std::string>>;

inline std::pair<std::string, std::string> Ordered(const std::string& x,
                                                   const std::string& y) {
  return x < y ? std::pair(x, y) : std::pair(y, x);
}

// All-pairs top-k then threshold over cross-article neighbours, each claim
// ranking its neighbours by (cosine desc, claim_id asc). Returns the union of
// unordered pairs with their cosine.
inline std::vector<pairfilter::CandidatePair> BruteForceEmbedOracle(
    const std::vector<claimext::Claim>& claims,
    const std::vector<backends::Embedding>& vectors, int k,
    double threshold) {
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<pairfilter::CandidatePair> out;
  for (size_t i = 0; i < claims.size(); ++i) {
    std::vector<std::pair<double, size_t>> all;
    for (size_t j = 0; j < claims.size(); ++j) {
      if (claims[j].article_id == claims[i].article_id) continue;
      all.emplace_back(backends::CosineSimilarity(vectors[i], vectors[j]), j);
    }
    std::sort(all.begin(), all.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return claims[x.second].claim_id < claims[y.second].claim_id;
    });
    for (size_t r = 0; r < all.size() && r < static_cast<size_t>(k); ++r) {
      if (all[r].first < threshold) continue;
      auto key = Ordered(claims[i].claim_id, claims[all[r].second].claim_id);
      if (!seen.insert(key).second) continue;
      out.push_back({key.first, key.second, all[r].first,
                     pairfilter::FilterMethod::kEmbeddingSimilarity});
    }
  }
  std::sort(out.begin(), out.end(), pairfilter::CandidateOrder);
  return out;
}

// Every cross-article pair scored directly; shared-token-free pairs never
// qualify.
inline std::vector<pairfilter::CandidatePair> BruteForceLexicalOracle(
    const std::vector<claimext::Claim>& claims, double threshold) {
  std::vector<pairfilter::CandidatePair> out;
  for (size_t i = 0; i < claims.size(); ++i) {
    for (size_t j = i + 1; j < claims.size(); ++j) {
      if (claims[i].article_id == claims[j].article_id) continue;
      const double s =
          pairfilter::LexicalOverlapScore(claims[i].text, claims[j].text);
      if (s <= 0.0 || s < threshold) continue;
      auto key = Ordered(claims[i].claim_id, claims[j].claim_id);
      out.push_back({key.first, key.second, s,
                     pairfilter::FilterMethod::kLexicalOverlap});
    }
  }
  std::sort(out.begin(), out.end(), pairfilter::CandidateOrder);
  return out;
}

struct Confusion {
  size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

inline Confusion CountConfusion(const std::vector<evalharness::Gold>& gold,
                                const std::vector<bool>& retained) {
  Confusion c;
  for (size_t i = 0; i < gold.size(); ++i) {
    const bool pos = gold[i] == evalharness::Gold::kPositive;
    if (pos && retained[i]) ++c.tp;
    if (!pos && retained[i]) ++c.fp;
    if (!pos && !retained[i]) ++c.tn;
    if (pos && !retained[i]) ++c.fn;
  }
  return c;
}

inline double SafeRatio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

inline double F1(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

// Precision, recall, TNR and macro-F1 over {positive, negative} from raw
// counts. The negative class treats "discarded" as its prediction.
inline evalharness::FilterMetrics OracleMetrics(
    const std::vector<evalharness::Gold>& gold,
    const std::vector<bool>& retained) {
  const Confusion c = CountConfusion(gold, retained);
  evalharness::FilterMetrics m;
  m.tp = c.tp;
  m.fp = c.fp;
  m.tn = c.tn;
  m.fn = c.fn;
  m.precision = SafeRatio(c.tp, c.tp + c.fp);
  m.recall = SafeRatio(c.tp, c.tp + c.fn);
  m.tnr = SafeRatio(c.tn, c.tn + c.fp);
  const double neg_precision = SafeRatio(c.tn, c.tn + c.fn);
  m.macro_f1 = (F1(m.precision, m.recall) + F1(neg_precision, m.tnr)) / 2.0;
  return m;
}

}  // namespace crosscheck::testing

#endif  // CROSSCHECK_TESTS_TESTING_ORACLES_H_
