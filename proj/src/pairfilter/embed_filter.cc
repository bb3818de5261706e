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
#include <numeric>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "crosscheck/backends/cosine.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/pairfilter/filter.h"
#include "crosscheck/simd/kernels.h"

namespace crosscheck::pairfilter {
namespace {

// Large clusters are embedded in slices so HTTP payloads stay bounded.
constexpr size_t kEmbedBatch = 128;

struct Neighbour {
  double score;
  size_t index;
};

}  // namespace

std::string_view FilterMethodName(FilterMethod method) {
  return method == FilterMethod::kEmbeddingSimilarity ? "embedding_similarity"
                                                      : "lexical_overlap";
}

std::optional<FilterMethod> ParseFilterMethod(std::string_view name) {
  if (name == "embedding_similarity" || name == "es") {
    return FilterMethod::kEmbeddingSimilarity;
  }
  if (name == "lexical_overlap" || name == "leo") {
    return FilterMethod::kLexicalOverlap;
  }
  return std::nullopt;
}

absl::Status FilterConfig::Validate() const {
  if (!(cosine_threshold >= 0.0 && cosine_threshold <= 1.0)) {
    return absl::InvalidArgumentError("cosine_threshold must be in [0, 1]");
  }
  if (!(jaccard_threshold >= 0.0 && jaccard_threshold <= 1.0)) {
    return absl::InvalidArgumentError("jaccard_threshold must be in [0, 1]");
  }
  if (top_k < 1) return absl::InvalidArgumentError("top_k must be >= 1");
  if (parallelism < 1) {
    return absl::InvalidArgumentError("parallelism must be >= 1");
  }
  return absl::OkStatus();
}

bool CandidateOrder(const CandidatePair& x, const CandidatePair& y) {
  if (x.score != y.score) return x.score > y.score;
  if (x.claim_a != y.claim_a) return x.claim_a < y.claim_a;
  return x.claim_b < y.claim_b;
}

size_t CrossArticlePairCount(std::span<const claimext::Claim> claims) {
  absl::flat_hash_map<std::string, size_t> per_article;
  for (const auto& c : claims) ++per_article[c.article_id];
  size_t same = 0;
  for (const auto& [id, n] : per_article) same += n * (n - 1) / 2;
  return claims.size() * (claims.size() - 1) / 2 - same;
}

absl::StatusOr<std::vector<CandidatePair>> EmbedFilter(
    std::span<const claimext::Claim> claims,
    backends::EmbeddingBackend& backend, const FilterConfig& config,
    FilterStats* stats) {
  RETURN_IF_ERROR(config.Validate());
  std::vector<backends::Embedding> vectors;
  vectors.reserve(claims.size());
  for (size_t begin = 0; begin < claims.size(); begin += kEmbedBatch) {
    const size_t end = std::min(claims.size(), begin + kEmbedBatch);
    std::vector<std::string> texts;
    for (size_t i = begin; i < end; ++i) texts.push_back(claims[i].text);
    ASSIGN_OR_RETURN(std::vector<backends::Embedding> batch,
                     backend.Embed(texts));
    RETURN_IF_ERROR(backends::ValidateEmbeddings(
        batch, texts.size(), backend.dimension(), backend.normalized()));
    for (auto& v : batch) vectors.push_back(std::move(v));
  }
  return EmbedFilterVectors(claims, vectors, config, stats);
}

absl::StatusOr<std::vector<CandidatePair>> EmbedFilterVectors(
    std::span<const claimext::Claim> claims,
    std::span<const backends::Embedding> vectors, const FilterConfig& config,
    FilterStats* stats) {
  RETURN_IF_ERROR(config.Validate());
  if (vectors.size() != claims.size()) {
    return absl::InvalidArgumentError("one vector per claim required");
  }
  const size_t n = claims.size();
  const size_t dim = n == 0 ? 0 : vectors[0].size();
  for (size_t i = 0; i < n; ++i) {
    if (vectors[i].size() != dim) {
      return absl::InvalidArgumentError(absl::StrCat(
          "embedding dimension mismatch: ", vectors[i].size(), " vs ", dim));
    }
  }

  // Article ordinals replace string compares in the inner loop.
  absl::flat_hash_map<std::string, int> article_ordinal;
  std::vector<int> article(n);
  for (size_t i = 0; i < n; ++i) {
    article[i] = article_ordinal
                     .try_emplace(claims[i].article_id,
                                  static_cast<int>(article_ordinal.size()))
                     .first->second;
  }

  FilterStats local;
  local.claims = n;
  local.articles = article_ordinal.size();
  local.cross_article_pairs = CrossArticlePairCount(claims);
  std::vector<CandidatePair> out;
  if (local.articles < 2) {
    if (stats != nullptr) *stats = local;
    return out;
  }

  std::vector<float> rows(n * dim);
  std::vector<double> norms(n);
  for (size_t i = 0; i < n; ++i) {
    std::copy(vectors[i].begin(), vectors[i].end(), rows.begin() + i * dim);
    norms[i] = backends::L2Norm(vectors[i]);
  }

  const size_t k = static_cast<size_t>(config.top_k);
  auto better = [&](const Neighbour& x, const Neighbour& y) {
    if (x.score != y.score) return x.score > y.score;
    return claims[x.index].claim_id < claims[y.index].claim_id;
  };
  std::vector<std::vector<Neighbour>> kept(n);
  ParallelFor(n, config.parallelism, [&](size_t i) {
    std::vector<double> dots(n);
    simd::DotMany(std::span<const float>(rows.data() + i * dim, dim), rows,
                  dim, dots);
    std::vector<Neighbour> pool;
    pool.reserve(n);
    for (size_t j = 0; j < n; ++j) {
      if (article[j] == article[i]) continue;
      pool.push_back(
          {backends::CosineFromParts(dots[j], norms[i], norms[j]), j});
    }
    const size_t take = std::min(k, pool.size());
    std::partial_sort(pool.begin(), pool.begin() + take, pool.end(), better);
    pool.resize(take);
    std::erase_if(pool, [&](const Neighbour& nb) {
      return nb.score < config.cosine_threshold;
    });
    kept[i] = std::move(pool);
  });

  local.pairs_scored = local.cross_article_pairs;
  // A pair found from both ends carries the same score either way: the
  // dot product and the norm product are both symmetric bit for bit.
  absl::flat_hash_map<std::pair<size_t, size_t>, double> unique;
  for (size_t i = 0; i < n; ++i) {
    local.pairs_before_dedup += kept[i].size();
    for (const Neighbour& nb : kept[i]) {
      const bool i_first = claims[i].claim_id < claims[nb.index].claim_id;
      unique.try_emplace(i_first ? std::pair(i, nb.index)
                                 : std::pair(nb.index, i),
                         nb.score);
    }
  }
  out.reserve(unique.size());
  for (const auto& [ij, score] : unique) {
    out.push_back({claims[ij.first].claim_id, claims[ij.second].claim_id,
                   score, FilterMethod::kEmbeddingSimilarity});
  }
  std::sort(out.begin(), out.end(), CandidateOrder);
  local.emitted = out.size();
  if (stats != nullptr) *stats = local;
  return out;
}

absl::StatusOr<std::vector<CandidatePair>> FilterCandidates(
    std::span<const claimext::Claim> claims,
    backends::EmbeddingBackend& backend, const FilterConfig& config,
    FilterStats* stats) {
  if (config.method == FilterMethod::kEmbeddingSimilarity) {
    return EmbedFilter(claims, backend, config, stats);
  }
  RETURN_IF_ERROR(config.Validate());
  return LexicalFilter(claims, config, stats);
}

}  // namespace crosscheck::pairfilter
