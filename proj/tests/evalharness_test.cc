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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "crosscheck/backends/stubs.h"
#include "crosscheck/base/random.h"
#include "crosscheck/evalharness/eval.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace crosscheck::evalharness {
namespace {

using nlilink::NliLabel;
using pairfilter::FilterConfig;
using pairfilter::FilterMethod;
using ::testing::HasSubstr;

const std::string kData = std::string(CROSSCHECK_TEST_DATA) + "/eval/";

// Pinned: precision, recall and TNR are single integer divisions and must
// match bitwise. Macro-F1 is computed from counts in production and from
// the harmonic mean of precision and recall here; both are exact up to
// rounding.
constexpr double kMacroF1Tolerance = 1e-12;

void ExpectMatchesOracle(const FilterMetrics& got, const FilterMetrics& want) {
  EXPECT_EQ(got.tp, want.tp);
  EXPECT_EQ(got.fp, want.fp);
  EXPECT_EQ(got.tn, want.tn);
  EXPECT_EQ(got.fn, want.fn);
  EXPECT_EQ(got.precision, want.precision);
  EXPECT_EQ(got.recall, want.recall);
  EXPECT_EQ(got.tnr, want.tnr);
  EXPECT_NEAR(got.macro_f1, want.macro_f1, kMacroF1Tolerance);
}

FilterMetrics Compute(const std::vector<Gold>& gold,
                      const std::vector<bool>& retained) {
  std::unique_ptr<bool[]> bits(new bool[retained.size()]);
  std::copy(retained.begin(), retained.end(), bits.get());
  return ComputeMetrics(gold,
                        std::span<const bool>(bits.get(), retained.size()));
}

// ---------------------------------------------------------------------------
// Loading

TEST(ParseNliTsv, HeaderAliasesAndLabels) {
  auto got = ParseNliTsv(
      "sentence1\tsentence2\tgold_label\n"
      "A man sleeps.\tA person rests.\tentailment\n"
      "A dog runs.\tA cat sleeps.\t2\n"
      "Sun is up.\tIt rains.\tneutral\n"
      "Bad row.\tNo consensus.\t-\n");
  ASSERT_TRUE(got.ok()) << got.status();
  ASSERT_EQ(got->size(), 3u);
  EXPECT_EQ((*got)[0].label, NliLabel::kEntailment);
  EXPECT_EQ((*got)[1].label, NliLabel::kContradiction);
  EXPECT_EQ((*got)[2].premise, "Sun is up.");
}

TEST(ParseNliTsv, RejectsMissingColumns) {
  EXPECT_FALSE(ParseNliTsv("premise\tlabel\nx\tentailment\n").ok());
  EXPECT_FALSE(ParseNliTsv("").ok());
}

TEST(ParseNliJsonl, IntegerAndStringLabels) {
  auto got = ParseNliJsonl(
      R"({"premise": "p1", "hypothesis": "h1", "label": 0})"
      "\n"
      R"({"premise": "p2", "hypothesis": "h2", "label": "contradiction"})"
      "\n\n"
      R"({"premise": "p3", "hypothesis": "h3", "label": -1})"
      "\n");
  ASSERT_TRUE(got.ok()) << got.status();
  ASSERT_EQ(got->size(), 2u);
  EXPECT_EQ((*got)[0].label, NliLabel::kEntailment);
  EXPECT_EQ((*got)[1].label, NliLabel::kContradiction);
  EXPECT_FALSE(ParseNliJsonl("{not json}\n").ok());
}

TEST(ParseLabel, NamesAndMnliIntegers) {
  EXPECT_EQ(ParseLabel("0"), NliLabel::kEntailment);
  EXPECT_EQ(ParseLabel("1"), NliLabel::kNeutral);
  EXPECT_EQ(ParseLabel("2"), NliLabel::kContradiction);
  EXPECT_EQ(ParseLabel("neutral"), NliLabel::kNeutral);
  EXPECT_EQ(ParseLabel("-1"), std::nullopt);
  EXPECT_EQ(ParseLabel("maybe"), std::nullopt);
}

TEST(LoadNliFile, ChoosesParserByExtension) {
  auto tsv = LoadNliFile(kData + "small.tsv");
  ASSERT_TRUE(tsv.ok()) << tsv.status();
  EXPECT_EQ(tsv->size(), 10u);
  const auto path = std::filesystem::temp_directory_path() / "cc_nli.jsonl";
  std::ofstream(path) << R"({"premise":"a","hypothesis":"b","label":1})"
                      << "\n";
  auto jsonl = LoadNliFile(path.string());
  ASSERT_TRUE(jsonl.ok()) << jsonl.status();
  EXPECT_EQ(jsonl->size(), 1u);
  std::filesystem::remove(path);
  EXPECT_FALSE(LoadNliFile(kData + "missing.tsv").ok());
}

// ---------------------------------------------------------------------------
// Eval set construction

TEST(BuildEvalSet, CountsOnSmallFixture) {
  auto examples = LoadNliFile(kData + "small.tsv");
  ASSERT_TRUE(examples.ok());
  auto set = BuildEvalSet(*examples, {.n_negatives = 4, .seed = 1});
  ASSERT_TRUE(set.ok());
  const auto pos = std::count_if(set->begin(), set->end(), [](const auto& p) {
    return p.gold == Gold::kPositive;
  });
  EXPECT_EQ(pos, 5);
  EXPECT_EQ(set->size(), 9u);
}

TEST(BuildEvalSet, ZeroNegativesGivesPositivesOnly) {
  auto examples = LoadNliFile(kData + "small.tsv");
  auto set = BuildEvalSet(*examples, {.n_negatives = 0});
  ASSERT_TRUE(set.ok());
  EXPECT_EQ(set->size(), 5u);
  for (const auto& p : *set) EXPECT_EQ(p.gold, Gold::kPositive);
}

TEST(BuildEvalSet, DeterministicForSeedAndVariesAcrossSeeds) {
  auto examples = LoadNliFile(kData + "nli_fixture.tsv");
  ASSERT_TRUE(examples.ok());
  const EvalSetOptions o{.n_negatives = 100, .seed = 7};
  auto a = BuildEvalSet(*examples, o), b = BuildEvalSet(*examples, o);
  auto c = BuildEvalSet(*examples, {.n_negatives = 100, .seed = 8});
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(*a, *b);
  EXPECT_NE(*a, *c);
}

TEST(BuildEvalSet, NegativesAreDistinctPremisePairs) {
  auto examples = LoadNliFile(kData + "nli_fixture.tsv");
  auto set = BuildEvalSet(*examples, {.n_negatives = 100, .seed = 3});
  ASSERT_TRUE(set.ok());
  std::set<std::string> premises;
  for (const auto& e : *examples) premises.insert(e.premise);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& p : *set) {
    if (p.gold != Gold::kNegative) continue;
    EXPECT_NE(p.text_a, p.text_b);
    EXPECT_TRUE(premises.contains(p.text_a));
    EXPECT_TRUE(premises.contains(p.text_b));
    EXPECT_TRUE(seen.insert(testing::Ordered(p.text_a, p.text_b)).second);
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST(BuildEvalSet, SubsamplesPositivesAndRejectsImpossibleNegatives) {
  auto examples = LoadNliFile(kData + "nli_fixture.tsv");
  auto set = BuildEvalSet(*examples,
                          {.n_negatives = 0, .seed = 2, .max_positives = 30});
  ASSERT_TRUE(set.ok());
  EXPECT_EQ(set->size(), 30u);
  auto small = LoadNliFile(kData + "small.tsv");
  EXPECT_EQ(BuildEvalSet(*small, {.n_negatives = 46}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_TRUE(BuildEvalSet(*small, {.n_negatives = 45}).ok());
}

// ---------------------------------------------------------------------------
// Metrics

TEST(ComputeMetrics, PerfectFilter) {
  const std::vector<Gold> gold = {Gold::kPositive, Gold::kNegative,
                                  Gold::kPositive, Gold::kNegative};
  const auto m = Compute(gold, {true, false, true, false});
  EXPECT_EQ(m.precision, 1.0);
  EXPECT_EQ(m.recall, 1.0);
  EXPECT_EQ(m.tnr, 1.0);
  EXPECT_EQ(m.macro_f1, 1.0);
}

TEST(ComputeMetrics, RetainEverything) {
  const std::vector<Gold> gold = {Gold::kPositive, Gold::kNegative,
                                  Gold::kNegative};
  const auto m = Compute(gold, {true, true, true});
  EXPECT_EQ(m.recall, 1.0);
  EXPECT_EQ(m.tnr, 0.0);
  EXPECT_DOUBLE_EQ(m.precision, 1.0 / 3.0);
}

TEST(ComputeMetrics, DegenerateSets) {
  const std::vector<Gold> all_pos(5, Gold::kPositive);
  const std::vector<Gold> all_neg(5, Gold::kNegative);
  for (const auto& gold : {all_pos, all_neg}) {
    for (bool keep : {true, false}) {
      const std::vector<bool> retained(gold.size(), keep);
      ExpectMatchesOracle(Compute(gold, retained),
                          testing::OracleMetrics(gold, retained));
    }
  }
  const auto m = Compute(all_neg, std::vector<bool>(5, false));
  EXPECT_EQ(m.precision, 0.0);
  EXPECT_EQ(m.recall, 0.0);
  EXPECT_EQ(m.tnr, 1.0);
  EXPECT_EQ(m.macro_f1, 0.5);
}

TEST(ComputeMetrics, PropertyMatchesOracleOnRandomSets) {
  SeededRng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = 1 + rng.UniformIndex(60);
    std::vector<Gold> gold(n);
    std::vector<bool> retained(n);
    for (size_t i = 0; i < n; ++i) {
      gold[i] = rng.UniformIndex(2) ? Gold::kPositive : Gold::kNegative;
      retained[i] = rng.UniformIndex(3) != 0;
    }
    const auto got = Compute(gold, retained);
    ExpectMatchesOracle(got, testing::OracleMetrics(gold, retained));
    EXPECT_EQ(got.tp + got.fp + got.tn + got.fn, n);
  }
}

TEST(EvaluateFilter, MatchesOracleOnFixture) {
  auto examples = LoadNliFile(kData + "nli_fixture.tsv");
  auto set = BuildEvalSet(*examples, {.n_negatives = 100, .seed = 0});
  ASSERT_TRUE(set.ok());
  ASSERT_EQ(set->size(), 200u);
  backends::StubEmbeddingBackend stub;
  for (FilterMethod method :
       {FilterMethod::kLexicalOverlap, FilterMethod::kEmbeddingSimilarity}) {
    FilterConfig cfg;
    cfg.method = method;
    auto got = EvaluateFilter(*set, cfg, &stub);
    ASSERT_TRUE(got.ok()) << got.status();
    std::vector<Gold> gold;
    std::vector<bool> retained;
    for (const auto& p : *set) {
      gold.push_back(p.gold);
      if (method == FilterMethod::kLexicalOverlap) {
        const double s = pairfilter::LexicalOverlapScore(p.text_a, p.text_b);
        retained.push_back(s > 0.0 && s >= cfg.jaccard_threshold);
      } else {
        retained.push_back(backends::CosineSimilarity(
                               stub.EmbedOne(p.text_a),
                               stub.EmbedOne(p.text_b)) >=
                           cfg.cosine_threshold);
      }
    }
    ExpectMatchesOracle(*got, testing::OracleMetrics(gold, retained));
  }
}

TEST(EvaluateFilter, PropertyThresholdMonotonicity) {
  auto examples = LoadNliFile(kData + "nli_fixture.tsv");
  auto set = BuildEvalSet(*examples, {.n_negatives = 100, .seed = 4});
  backends::StubEmbeddingBackend stub;
  for (FilterMethod method :
       {FilterMethod::kLexicalOverlap, FilterMethod::kEmbeddingSimilarity}) {
    double prev_recall = 2.0, prev_tnr = -1.0;
    for (int step = 0; step <= 20; ++step) {
      FilterConfig cfg;
      cfg.method = method;
      cfg.cosine_threshold = cfg.jaccard_threshold = step / 20.0;
      auto m = EvaluateFilter(*set, cfg, &stub);
      ASSERT_TRUE(m.ok());
      EXPECT_LE(m->recall, prev_recall) << step;
      EXPECT_GE(m->tnr, prev_tnr) << step;
      prev_recall = m->recall;
      prev_tnr = m->tnr;
    }
  }
}

TEST(EvaluateFilter, ErrorsOnEmptySetOrMissingBackend) {
  FilterConfig cfg;
  EXPECT_FALSE(EvaluateFilter({}, cfg, nullptr).ok());
  const std::vector<EvalPair> one = {{"a", "b", Gold::kPositive}};
  EXPECT_FALSE(EvaluateFilter(one, cfg, nullptr).ok());
  cfg.method = FilterMethod::kLexicalOverlap;
  EXPECT_TRUE(EvaluateFilter(one, cfg, nullptr).ok());
}

TEST(Retains, LexicalNeedsSharedToken) {
  EXPECT_FALSE(Retains(FilterMethod::kLexicalOverlap, 0.0, 0.0));
  EXPECT_TRUE(Retains(FilterMethod::kEmbeddingSimilarity, 0.0, 0.0));
  EXPECT_TRUE(Retains(FilterMethod::kLexicalOverlap, 0.1, 0.1));
  EXPECT_FALSE(Retains(FilterMethod::kLexicalOverlap, 0.09, 0.1));
}

TEST(MetricsReport, JsonAndTable) {
  FilterMetrics m{0.5, 0.25, 0.4, 0.75, 1, 1, 3, 3};
  const auto j = MetricsToJson(m);
  EXPECT_EQ(j["precision"], 0.5);
  EXPECT_EQ(j["tn"], 3);
  EXPECT_THAT(MetricsTable("lexical_overlap", m),
              HasSubstr("lexical_overlap"));
}

}  // namespace
}  // namespace crosscheck::evalharness
