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

#include "crosscheck/claimext/claims.h"

#include "absl/container/flat_hash_set.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/utf8.h"
#include "glog/logging.h"
#include "unicode/unistr.h"

namespace crosscheck::assets {
extern const char kClaimPrompt[];
}  // namespace crosscheck::assets

namespace crosscheck::claimext {
namespace {

std::string FoldCase(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.foldCase();
  std::string out;
  u.toUTF8String(out);
  return out;
}

Claim Passthrough(std::string_view article_id,
                  const corpus::Sentence& sentence) {
  return Claim{MakeClaimId(article_id, sentence.sentence_index, 0),
               std::string(article_id), sentence.sentence_index,
               sentence.text, ExtractionMethod::kPassthrough};
}

}  // namespace

std::string_view ExtractionMethodName(ExtractionMethod method) {
  return method == ExtractionMethod::kLlm ? "llm" : "passthrough";
}

std::optional<ExtractionMethod> ParseExtractionMethod(std::string_view name) {
  if (name == "llm") return ExtractionMethod::kLlm;
  if (name == "passthrough") return ExtractionMethod::kPassthrough;
  return std::nullopt;
}

std::string MakeClaimId(std::string_view article_id, int sentence_index,
                        int claim_index) {
  return absl::StrFormat("%s-s%04d-c%02d", AbslView(article_id),
                         sentence_index, claim_index);
}

std::string_view ClaimPromptTemplate() { return assets::kClaimPrompt; }

std::string BuildClaimPrompt(std::string_view sentence) {
  const std::string_view tmpl = ClaimPromptTemplate();
  const size_t slot = tmpl.rfind(kSentenceSlot);
  CHECK_NE(slot, std::string_view::npos) << "prompt asset lacks its slot";
  return absl::StrCat(AbslView(tmpl.substr(0, slot)), "\"",
                      AbslView(sentence), "\"",
                      AbslView(tmpl.substr(slot + kSentenceSlot.size())));
}

std::vector<std::string> ParseClaimList(std::string_view completion) {
  std::vector<std::string> claims;
  absl::flat_hash_set<std::string> seen;
  for (absl::string_view line : absl::StrSplit(AbslView(completion), '\n')) {
    std::string_view rest = TrimWhitespace(StdView(line));
    if (!rest.starts_with("Claim:")) continue;
    rest = TrimWhitespace(rest.substr(6));
    if (rest.empty()) continue;
    if (seen.insert(FoldCase(rest)).second) claims.emplace_back(rest);
  }
  return claims;
}

std::string FormatClaimList(const std::vector<std::string>& claims) {
  std::string out;
  for (const std::string& c : claims) absl::StrAppend(&out, "Claim: ", c, "\n");
  return out;
}

std::optional<std::string> TruncateAtWord(std::string_view text,
                                          size_t max_chars) {
  const std::vector<size_t> offsets = CodepointByteOffsets(text);
  if (offsets.size() - 1 <= max_chars) return std::nullopt;
  // Last whitespace at or before the limit; the cut drops it.
  size_t cut = max_chars;
  for (size_t i = max_chars; i > 0; --i) {
    size_t pos = offsets[i];
    if (IsSpaceCodepoint(DecodeUtf8(text, &pos))) {
      cut = i;
      break;
    }
  }
  return std::string(TrimWhitespace(text.substr(0, offsets[cut])));
}

ExtractionStats& ExtractionStats::operator+=(const ExtractionStats& o) {
  sentences += o.sentences;
  llm_sentences += o.llm_sentences;
  passthrough_sentences += o.passthrough_sentences;
  backend_failures += o.backend_failures;
  truncated_claims += o.truncated_claims;
  return *this;
}

std::vector<Claim> ExtractClaims(std::string_view article_id,
                                 const corpus::Sentence& sentence,
                                 backends::CompletionBackend& backend,
                                 ExtractionStats* stats) {
  ExtractionStats local;
  local.sentences = 1;
  std::vector<Claim> claims;

  absl::StatusOr<std::string> completion =
      backend.Complete(BuildClaimPrompt(sentence.text));
  if (!completion.ok()) {
    ++local.backend_failures;
    LOG(WARNING) << "claim extraction failed for " << article_id << "/"
                 << sentence.sentence_index << ": " << completion.status();
  } else {
    std::vector<std::string> texts = ParseClaimList(*completion);
    for (size_t i = 0; i < texts.size(); ++i) {
      std::string text = std::move(texts[i]);
      if (auto cut = TruncateAtWord(text, kMaxClaimChars)) {
        ++local.truncated_claims;
        LOG(WARNING) << "truncated claim " << i << " of " << article_id
                     << "/" << sentence.sentence_index;
        text = std::move(*cut);
      }
      claims.push_back(Claim{
          MakeClaimId(article_id, sentence.sentence_index,
                      static_cast<int>(i)),
          std::string(article_id), sentence.sentence_index, std::move(text),
          ExtractionMethod::kLlm});
    }
  }
  if (claims.empty()) {
    claims.push_back(Passthrough(article_id, sentence));
    ++local.passthrough_sentences;
  } else {
    ++local.llm_sentences;
  }
  if (stats != nullptr) *stats += local;
  return claims;
}

std::vector<Claim> ExtractClusterClaims(const corpus::ArticleCluster& cluster,
                                        backends::CompletionBackend& backend,
                                        const ExtractOptions& options,
                                        ExtractionStats* stats) {
  struct Job {
    const corpus::Article* article;
    const corpus::Sentence* sentence;
  };
  std::vector<Job> jobs;
  for (const corpus::Article& a : cluster.articles) {
    for (const corpus::Sentence& s : a.sentences) jobs.push_back({&a, &s});
  }
  std::vector<std::vector<Claim>> per_job(jobs.size());
  std::vector<ExtractionStats> per_stats(jobs.size());
  ParallelFor(jobs.size(), options.parallelism, [&](size_t i) {
    per_job[i] = ExtractClaims(jobs[i].article->article_id,
                               *jobs[i].sentence, backend, &per_stats[i]);
  });
  std::vector<Claim> out;
  for (size_t i = 0; i < jobs.size(); ++i) {
    for (Claim& c : per_job[i]) out.push_back(std::move(c));
    if (stats != nullptr) *stats += per_stats[i];
  }
  return out;
}

}  // namespace crosscheck::claimext
