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
#include "crosscheck/base/random.h"
#include "crosscheck/base/utf8.h"
#include "crosscheck/claimext/claims.h"
#include "crosscheck/corpus/segmenter.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace crosscheck::claimext {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;

corpus::Sentence MakeSentence(int index, std::string text) {
  corpus::Sentence s;
  s.sentence_index = index;
  s.span_end = text.size();
  s.text = std::move(text);
  return s;
}

class FailingCompletion : public backends::CompletionBackend {
 public:
  absl::StatusOr<std::string> Complete(std::string_view) override {
    return absl::UnavailableError("offline");
  }
  bool deterministic() const override { return true; }
};

class FixedCompletion : public backends::CompletionBackend {
 public:
  explicit FixedCompletion(std::string text) : text_(std::move(text)) {}
  absl::StatusOr<std::string> Complete(std::string_view) override {
    return text_;
  }
  bool deterministic() const override { return true; }

 private:
  std::string text_;
};

TEST(ParseClaimList, Examples) {
  EXPECT_THAT(ParseClaimList("Claim: A.\nClaim: B."), ElementsAre("A.", "B."));
  EXPECT_THAT(ParseClaimList("Claim: A.\nnoise\nClaim: A."), ElementsAre("A."));
  EXPECT_THAT(ParseClaimList(""), IsEmpty());
}

TEST(ParseClaimList, TrimsAndDedupsCaseInsensitively) {
  EXPECT_THAT(ParseClaimList("  Claim:   Trains stopped.  \r\n"
                             "Claim: trains STOPPED.\n"
                             "Claim:\n"
                             "claim: lowercase prefix ignored\n"
                             "Claim: Straße closed.\nClaim: STRASSE closed."),
              ElementsAre("Trains stopped.", "Straße closed."));
}

TEST(ParseClaimList, PropertyIdempotentThroughFormat) {
  SeededRng rng(5);
  const std::vector<std::string> pool = {"A.", "b.", "B.", "Gas leaked.",
                                         "noise", "Claim: nested."};
  for (int trial = 0; trial < 200; ++trial) {
    std::string completion;
    const size_t n = rng.UniformIndex(8);
    for (size_t i = 0; i < n; ++i) {
      if (rng.UniformIndex(4) == 0) {
        completion += pool[rng.UniformIndex(pool.size())] + "\n";
      } else {
        completion += "Claim: " + pool[rng.UniformIndex(pool.size())] + "\n";
      }
    }
    const auto once = ParseClaimList(completion);
    EXPECT_EQ(ParseClaimList(FormatClaimList(once)), once) << completion;
  }
}

TEST(BuildClaimPrompt, QuotesSentenceIntoSlot) {
  const std::string prompt = BuildClaimPrompt("Trains stopped.");
  EXPECT_THAT(prompt, HasSubstr("Sentence: \"Trains stopped.\""));
  EXPECT_EQ(prompt.find(kSentenceSlot), std::string::npos);
  EXPECT_TRUE(prompt.starts_with("Extract all the claims from a sentence"));
  EXPECT_EQ(ClaimPromptTemplate().find(kSentenceSlot),
            ClaimPromptTemplate().rfind(kSentenceSlot));
}

TEST(ExtractClaims, FewShotExemplarsReplay) {
  backends::ExemplarCompletionBackend backend;
  const auto two = ExtractClaims(
      "a000",
      MakeSentence(3,
                   "Lewis Hamilton and Mercedes have once again confirmed "
                   "themselves as drivers and constructors world champions."),
      backend);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].text,
            "Mercedes confirmed themselves as constructors world champions.");
  EXPECT_EQ(two[1].text,
            "Lewis Hamilton confirmed themselves as drivers world champions.");
  EXPECT_EQ(two[0].claim_id, "a000-s0003-c00");
  EXPECT_EQ(two[1].claim_id, "a000-s0003-c01");
  EXPECT_EQ(two[0].extraction_method, ExtractionMethod::kLlm);

  const auto five = ExtractClaims(
      "a001",
      MakeSentence(0,
                   "The 3rd and 4th stations all announced that they would be "
                   "postponed, and the Monaco station was subsequently "
                   "cancelled."),
      backend);
  ASSERT_EQ(five.size(), 5u);
  EXPECT_EQ(five[0].text, "Monaco station was cancelled.");
  EXPECT_EQ(five[4].text, "The 3rd stations postponed.");
}

TEST(ExtractClaims, EchoGivesOnePassthroughClaim) {
  backends::EchoCompletionBackend echo;
  ExtractionStats stats;
  const auto claims =
      ExtractClaims("a002", MakeSentence(7, "Crews responded quickly."), echo,
                    &stats);
  ASSERT_EQ(claims.size(), 1u);
  EXPECT_EQ(claims[0].text, "Crews responded quickly.");
  EXPECT_EQ(claims[0].extraction_method, ExtractionMethod::kPassthrough);
  EXPECT_EQ(claims[0].sentence_index, 7);
  EXPECT_EQ(stats.passthrough_sentences, 1);
}

TEST(ExtractClaims, BackendFailureFallsBackToPassthrough) {
  FailingCompletion failing;
  ExtractionStats stats;
  const auto claims =
      ExtractClaims("a000", MakeSentence(0, "Sirens sounded."), failing,
                    &stats);
  ASSERT_EQ(claims.size(), 1u);
  EXPECT_EQ(claims[0].extraction_method, ExtractionMethod::kPassthrough);
  EXPECT_EQ(stats.backend_failures, 1);
}

TEST(ExtractClaims, LongClaimsTruncateAtWordBoundary) {
  std::string long_claim;
  while (long_claim.size() < 700) long_claim += "word ";
  FixedCompletion backend("Claim: " + long_claim);
  ExtractionStats stats;
  const auto claims =
      ExtractClaims("a000", MakeSentence(0, "Anything."), backend, &stats);
  ASSERT_EQ(claims.size(), 1u);
  EXPECT_LE(CodepointLength(claims[0].text), kMaxClaimChars);
  EXPECT_TRUE(claims[0].text.ends_with("word"));
  EXPECT_EQ(stats.truncated_claims, 1);
}

TEST(TruncateAtWord, Examples) {
  EXPECT_EQ(TruncateAtWord("short", 10), std::nullopt);
  EXPECT_EQ(TruncateAtWord("alpha beta gamma", 12), "alpha beta");
  EXPECT_EQ(TruncateAtWord("unbrokenword", 5), "unbro");
  EXPECT_EQ(TruncateAtWord("ééé ééé", 5), "ééé");
}

TEST(ExtractClusterClaims, EchoCountEqualsSentenceCount) {
  corpus::ArticleCluster cluster;
  size_t sentences = 0;
  for (int a = 0; a < 3; ++a) {
    corpus::Article article;
    article.article_id = "a00" + std::to_string(a);
    article.body = "First fact here. Second fact there. Third one " +
                   std::to_string(a) + ".";
    article.sentences = corpus::SegmentSentences(article.body);
    sentences += article.sentences.size();
    cluster.articles.push_back(std::move(article));
  }
  backends::EchoCompletionBackend echo;
  ExtractionStats stats;
  const auto claims = ExtractClusterClaims(cluster, echo, {.parallelism = 3},
                                           &stats);
  EXPECT_EQ(claims.size(), sentences);
  EXPECT_EQ(stats.sentences, static_cast<int>(sentences));
  // Ordered by article then sentence regardless of worker scheduling.
  for (size_t i = 1; i < claims.size(); ++i) {
    EXPECT_LT(claims[i - 1].claim_id, claims[i].claim_id);
  }
}

TEST(ExtractionMethod, NamesRoundTrip) {
  for (auto m : {ExtractionMethod::kLlm, ExtractionMethod::kPassthrough}) {
    EXPECT_EQ(ParseExtractionMethod(ExtractionMethodName(m)), m);
  }
  EXPECT_EQ(ParseExtractionMethod("gpt"), std::nullopt);
}

}  // namespace
}  // namespace crosscheck::claimext
