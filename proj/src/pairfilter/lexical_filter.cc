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

#include "absl/container/flat_hash_map.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/pairfilter/filter.h"
#include "crosscheck/text/analysis.h"

namespace crosscheck::pairfilter {

std::vector<std::string> LexicalTokenSet(std::string_view text) {
  std::vector<std::string> stems = text::ContentStems(text);
  std::sort(stems.begin(), stems.end());
  stems.erase(std::unique(stems.begin(), stems.end()), stems.end());
  return stems;
}

double LexicalOverlapScore(std::string_view a, std::string_view b) {
  const std::vector<std::string> sa = LexicalTokenSet(a);
  const std::vector<std::string> sb = LexicalTokenSet(b);
  return JaccardSorted<std::string>(sa, sb);
}

std::vector<CandidatePair> LexicalFilter(
    std::span<const claimext::Claim> claims, const FilterConfig& config,
    FilterStats* stats) {
  const size_t n = claims.size();
  FilterStats local;
  local.claims = n;
  local.cross_article_pairs = CrossArticlePairCount(claims);

  absl::flat_hash_map<std::string, int> article_ordinal;
  std::vector<int> article(n);
  for (size_t i = 0; i < n; ++i) {
    article[i] = article_ordinal
                     .try_emplace(claims[i].article_id,
                                  static_cast<int>(article_ordinal.size()))
                     .first->second;
  }
  local.articles = article_ordinal.size();

  // Stems become dense ids; sets become sorted id vectors.
  std::vector<std::vector<std::string>> stem_sets(n);
  ParallelFor(n, config.parallelism, [&](size_t i) {
    stem_sets[i] = LexicalTokenSet(claims[i].text);
  });
  absl::flat_hash_map<std::string, int> vocab;
  std::vector<std::vector<int>> sets(n);
  std::vector<std::vector<size_t>> postings;
  for (size_t i = 0; i < n; ++i) {
    for (const std::string& stem : stem_sets[i]) {
      auto [it, inserted] =
          vocab.try_emplace(stem, static_cast<int>(vocab.size()));
      if (inserted) postings.emplace_back();
      sets[i].push_back(it->second);
      postings[it->second].push_back(i);
    }
    std::sort(sets[i].begin(), sets[i].end());
  }

  std::vector<CandidatePair> out;
  if (local.articles >= 2) {
    std::vector<std::vector<CandidatePair>> per_claim(n);
    std::vector<size_t> scored(n, 0);
    ParallelFor(n, config.parallelism, [&](size_t i) {
      // Partners j > i met through any shared stem, each visited once.
      std::vector<size_t> partners;
      for (int token : sets[i]) {
        const auto& list = postings[token];
        auto from = std::upper_bound(list.begin(), list.end(), i);
        for (auto it = from; it != list.end(); ++it) {
          if (article[*it] != article[i]) partners.push_back(*it);
        }
      }
      std::sort(partners.begin(), partners.end());
      partners.erase(std::unique(partners.begin(), partners.end()),
                     partners.end());
      scored[i] = partners.size();
      for (size_t j : partners) {
        const double score = JaccardSorted<int>(sets[i], sets[j]);
        if (score < config.jaccard_threshold) continue;
        const bool i_first = claims[i].claim_id < claims[j].claim_id;
        per_claim[i].push_back(
            {i_first ? claims[i].claim_id : claims[j].claim_id,
             i_first ? claims[j].claim_id : claims[i].claim_id, score,
             FilterMethod::kLexicalOverlap});
      }
    });
    for (size_t i = 0; i < n; ++i) {
      local.pairs_scored += scored[i];
      for (auto& p : per_claim[i]) out.push_back(std::move(p));
    }
  }
  local.pairs_before_dedup = out.size();
  std::sort(out.begin(), out.end(), CandidateOrder);
  local.emitted = out.size();
  if (stats != nullptr) *stats = local;
  return out;
}

}  // namespace crosscheck::pairfilter
