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


#include <string>
#include <vector>

#include "crosscheck/backends/stubs.h"
#include "crosscheck/pairfilter/filter.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace crosscheck::pairfilter {
namespace {

using claimext::Claim;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

Claim MakeClaim(std::string article, int sentence, std::string text) {
  return Claim{claimext::MakeClaimId(article, sentence, 0), article, sentence,
               std::move(text), claimext::ExtractionMethod::kLlm};
}

std::vector<backends::Embedding> StubVectors(const std::vector<Claim>& claims) {
  backends::StubEmbeddingBackend stub;
  std::vector<backends::Embedding> out;
  for (const auto& c : claims) out.push_back(stub.EmbedOne(c.text));
  return out;
}

// ---------------------------------------------------------------------------
// Lexical overlap score

TEST(LexicalOverlapScore, Examples) {
  EXPECT_EQ(LexicalOverlapScore("Trains derailed near the river.",
                                "Trains derailed near the river."),
            1.0);
  EXPECT_DOUBLE_EQ(LexicalOverlapScore("the cat sat", "a cat ran"), 1.0 / 3.0);
  EXPECT_EQ(LexicalOverlapScore("of the and", "cat"), 0.0);
  EXPECT_EQ(LexicalOverlapScore("of the", "and a"), 0.0);
}

TEST(LexicalTokenSet, SortedUniqueStems) {
  EXPECT_THAT(LexicalTokenSet("Running runs, the runner ran."),
              ElementsAre("ran", "run", "runner"));
}

TEST(JaccardSorted, Basic) {
  const std::vector<int> a = {1, 2, 3}, b = {2, 3, 4, 5}, e;
  EXPECT_DOUBLE_EQ(JaccardSorted<int>(a, b), 2.0 / 5.0);
  EXPECT_EQ(JaccardSorted<int>(e, e), 0.0);
  EXPECT_EQ(JaccardSorted<int>(a, a), 1.0);
}

// ---------------------------------------------------------------------------
// Lexical filter

TEST(LexicalFilter, IdenticalClaimsAcrossArticles) {
  const std::vector<Claim> claims = {
      MakeClaim("a", 0, "Norfolk Southern agreed to a relocation plan"),
      MakeClaim("b", 0, "Norfolk Southern agreed to a relocation plan")};
  const auto got = LexicalFilter(claims, FilterConfig{});
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].score, 1.0);
  EXPECT_EQ(got[0].claim_a, "a-s0000-c00");
  EXPECT_EQ(got[0].claim_b, "b-s0000-c00");
  EXPECT_EQ(got[0].method, FilterMethod::kLexicalOverlap);
}

TEST(LexicalFilter, TokenDisjointPairsAreNeverScored) {
  const std::vector<Claim> claims = {MakeClaim("a", 0, "Trains derailed."),
                                     MakeClaim("b", 0, "Fish died."),
                                     MakeClaim("c", 0, "Of the and.")};
  FilterConfig cfg;
  cfg.jaccard_threshold = 0.0;
  FilterStats stats;
  EXPECT_THAT(LexicalFilter(claims, cfg, &stats), IsEmpty());
  EXPECT_EQ(stats.pairs_scored, 0u);
  EXPECT_EQ(stats.cross_article_pairs, 3u);
}

TEST(LexicalFilter, SameArticlePairsExcluded) {
  const std::vector<Claim> claims = {MakeClaim("a", 0, "Trains derailed."),
                                     MakeClaim("a", 1, "Trains derailed.")};
  EXPECT_THAT(LexicalFilter(claims, FilterConfig{}), IsEmpty());
}

TEST(LexicalFilter, MatchesBruteForceOracle) {
  for (uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto claims = testing::RandomClaims(seed, 3, 10);
    for (double threshold : {0.0, 0.1, 0.25, 0.5, 1.0}) {
      FilterConfig cfg;
      cfg.method = FilterMethod::kLexicalOverlap;
      cfg.jaccard_threshold = threshold;
      EXPECT_EQ(LexicalFilter(claims, cfg),
                testing::BruteForceLexicalOracle(claims, threshold))
          << "seed " << seed << " threshold " << threshold;
    }
  }
}

TEST(LexicalFilter, ParallelismDoesNotChangeOutput) {
  const auto claims = testing::RandomClaims(9, 4, 15);
  FilterConfig one, many;
  one.parallelism = 1;
  many.parallelism = 8;
  EXPECT_EQ(LexicalFilter(claims, one), LexicalFilter(claims, many));
}

// ---------------------------------------------------------------------------
// Embedding filter

TEST(EmbedFilter, IdenticalClaimsScoreOne) {
  const std::vector<Claim> claims = {
      MakeClaim("a", 0, "Officials confirmed the water is safe."),
      MakeClaim("b", 3, "Officials confirmed the water is safe."),
      MakeClaim("b", 4, "Fish died in the river.")};
  backends::StubEmbeddingBackend stub;
  auto got = EmbedFilter(claims, stub, FilterConfig{});
  ASSERT_TRUE(got.ok());
  ASSERT_FALSE(got->empty());
  EXPECT_EQ((*got)[0].claim_a, "a-s0000-c00");
  EXPECT_EQ((*got)[0].claim_b, "b-s0003-c00");
  EXPECT_NEAR((*got)[0].score, 1.0, 1e-9);
}

TEST(EmbedFilter, SingleArticleGivesNoPairs) {
  const std::vector<Claim> claims = {MakeClaim("a", 0, "x y"),
                                     MakeClaim("a", 1, "x y")};
  backends::StubEmbeddingBackend stub;
  FilterStats stats;
  auto got = EmbedFilter(claims, stub, FilterConfig{}, &stats);
  ASSERT_TRUE(got.ok());
  EXPECT_THAT(*got, IsEmpty());
  EXPECT_EQ(stats.articles, 1u);
}

TEST(EmbedFilter, MatchesBruteForceOracleOnFortyClaims) {
  for (uint64_t seed : {11, 12, 13, 14}) {
    const auto claims = testing::RandomClaims(seed, 4, 10);
    const auto vectors = StubVectors(claims);
    for (int k : {1, 3, 16, 100}) {
      for (double threshold : {0.0, 0.3, 0.6}) {
        FilterConfig cfg;
        cfg.top_k = k;
        cfg.cosine_threshold = threshold;
        backends::StubEmbeddingBackend stub;
        auto got = EmbedFilter(claims, stub, cfg);
        ASSERT_TRUE(got.ok());
        EXPECT_EQ(*got, testing::BruteForceEmbedOracle(claims, vectors, k,
                                                       threshold))
            << "seed " << seed << " k " << k << " t " << threshold;
      }
    }
  }
}

TEST(EmbedFilter, PropertyInvariants) {
  const auto claims = testing::RandomClaims(21, 5, 12);
  backends::StubEmbeddingBackend stub;
  FilterConfig cfg;
  cfg.top_k = 4;
  FilterStats stats;
  auto got = EmbedFilter(claims, stub, cfg, &stats);
  ASSERT_TRUE(got.ok());
  EXPECT_LE(stats.pairs_before_dedup, claims.size() * 4);
  EXPECT_EQ(stats.emitted, got->size());
  EXPECT_LE(got->size(), stats.pairs_before_dedup);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& p : *got) {
    EXPECT_LT(p.claim_a, p.claim_b);
    EXPECT_NE(p.claim_a.substr(0, 4), p.claim_b.substr(0, 4));
    EXPECT_GE(p.score, cfg.cosine_threshold);
    EXPECT_TRUE(seen.insert({p.claim_a, p.claim_b}).second);
  }
  EXPECT_TRUE(std::is_sorted(got->begin(), got->end(), CandidateOrder));
}

TEST(EmbedFilter, DeterministicAcrossRunsAndParallelism) {
  const auto claims = testing::RandomClaims(22, 4, 20);
  backends::StubEmbeddingBackend stub;
  FilterConfig one, many;
  one.parallelism = 1;
  many.parallelism = 8;
  EXPECT_EQ(*EmbedFilter(claims, stub, one), *EmbedFilter(claims, stub, many));
}

TEST(EmbedFilterVectors, RejectsMismatchedInputs) {
  const std::vector<Claim> claims = {MakeClaim("a", 0, "x"),
                                     MakeClaim("b", 0, "y")};
  const std::vector<backends::Embedding> one = {{1.0f}};
  EXPECT_FALSE(EmbedFilterVectors(claims, one, FilterConfig{}).ok());
  const std::vector<backends::Embedding> ragged = {{1.0f}, {1.0f, 0.0f}};
  EXPECT_FALSE(EmbedFilterVectors(claims, ragged, FilterConfig{}).ok());
}

class WrongDimensionBackend : public backends::EmbeddingBackend {
 public:
  absl::StatusOr<std::vector<backends::Embedding>> Embed(
      std::span<const std::string> texts) override {
    return std::vector<backends::Embedding>(texts.size(),
                                            backends::Embedding(3, 0.5f));
  }
  int dimension() const override { return 4; }
  bool normalized() const override { return false; }
};

TEST(EmbedFilter, ValidatesBackendOutput) {
  const std::vector<Claim> claims = {MakeClaim("a", 0, "x"),
                                     MakeClaim("b", 0, "y")};
  WrongDimensionBackend bad;
  EXPECT_FALSE(EmbedFilter(claims, bad, FilterConfig{}).ok());
}

TEST(CrossArticlePairCount, CountsOnlyCrossPairs) {
  const auto claims = testing::RandomClaims(1, 3, 4);
  EXPECT_EQ(CrossArticlePairCount(claims), 3u * 16u);
}

TEST(FilterConfig, Validation) {
  FilterConfig c;
  EXPECT_TRUE(c.Validate().ok());
  c.top_k = 0;
  EXPECT_FALSE(c.Validate().ok());
  c = {};
  c.cosine_threshold = 1.5;
  EXPECT_FALSE(c.Validate().ok());
  c = {};
  c.jaccard_threshold = -0.1;
  EXPECT_FALSE(c.Validate().ok());
}

TEST(FilterMethod, NamesAndAliases) {
  EXPECT_EQ(ParseFilterMethod("es"), FilterMethod::kEmbeddingSimilarity);
  EXPECT_EQ(ParseFilterMethod("leo"), FilterMethod::kLexicalOverlap);
  EXPECT_EQ(ParseFilterMethod(FilterMethodName(FilterMethod::kLexicalOverlap)),
            FilterMethod::kLexicalOverlap);
  EXPECT_EQ(ParseFilterMethod("bm25"), std::nullopt);
}

}  // namespace
}  // namespace crosscheck::pairfilter
