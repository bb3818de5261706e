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

#include "crosscheck/backends/stubs.h"

#include <cmath>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "crosscheck/base/hash.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/simd/kernels.h"
#include "crosscheck/text/analysis.h"

namespace crosscheck::backends {
namespace {

constexpr uint64_t kSecondHashSeed = 0x9e3779b97f4a7c15ULL;

void AddFeature(std::string_view token, Embedding* v) {
  const size_t dim = v->size();
  const uint64_t h1 = Fnv1a64(token);
  const uint64_t h2 = Fnv1a64(token, kSecondHashSeed);
  (*v)[h1 % dim] += (h1 >> 63) ? -1.0f : 1.0f;
  (*v)[h2 % dim] += (h2 >> 63) ? -1.0f : 1.0f;
}

bool IsNegation(std::string_view token) {
  return token == "not" || token == "no" || token == "never";
}

// True if `longer` equals `shorter` with exactly one negation inserted.
bool DiffersByOneNegation(const std::vector<std::string>& shorter,
                          const std::vector<std::string>& longer) {
  if (longer.size() != shorter.size() + 1) return false;
  size_t i = 0;
  while (i < shorter.size() && shorter[i] == longer[i]) ++i;
  if (!IsNegation(longer[i])) return false;
  for (size_t j = i; j < shorter.size(); ++j) {
    if (shorter[j] != longer[j + 1]) return false;
  }
  return true;
}

std::string Unquote(std::string_view text) {
  std::string_view s = StdView(absl::StripAsciiWhitespace(AbslView(text)));
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

}  // namespace

StubEmbeddingBackend::StubEmbeddingBackend(int dimension)
    : dimension_(dimension) {}

Embedding StubEmbeddingBackend::EmbedOne(std::string_view text) const {
  Embedding v(static_cast<size_t>(dimension_), 0.0f);
  std::vector<std::string> features = text::ContentStems(text);
  if (features.empty()) features = text::TokenizeWords(text);
  for (const std::string& f : features) AddFeature(f, &v);
  double sq = simd::SquaredNorm(v);
  if (sq == 0.0) {
    v[Fnv1a64("\x01no-features") % v.size()] = 1.0f;
    sq = 1.0;
  }
  simd::Scale(v, static_cast<float>(1.0 / std::sqrt(sq)));
  return v;
}

absl::StatusOr<std::vector<Embedding>> StubEmbeddingBackend::Embed(
    std::span<const std::string> texts) {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(EmbedOne(t));
  return out;
}

std::vector<std::string> NliTokens(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string& token : text::TokenizeWords(text)) {
    if (token.size() > 3 && absl::EndsWith(token, "n't")) {
      tokens.push_back(token.substr(0, token.size() - 3));
      tokens.push_back("not");
    } else {
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

absl::StatusOr<NliScores> RuleNliBackend::Classify(
    std::string_view premise, std::string_view hypothesis) {
  const std::vector<std::string> p = NliTokens(premise);
  const std::vector<std::string> h = NliTokens(hypothesis);
  if (!p.empty() && p == h) return NliScores{1.0, 0.0, 0.0};
  if (DiffersByOneNegation(p, h) || DiffersByOneNegation(h, p)) {
    return NliScores{0.0, 1.0, 0.0};
  }
  return NliScores{0.0, 0.0, 1.0};
}

ParsedPrompt ParseFewShotPrompt(std::string_view prompt) {
  ParsedPrompt parsed;
  // The query slot is the last "Sentence:" with no claims after it. Its
  // text may itself span lines, so it is taken verbatim to the end.
  size_t last = prompt.rfind("Sentence:");
  std::string_view head = prompt;
  if (last != std::string_view::npos &&
      (last == 0 || prompt[last - 1] == '\n')) {
    std::string_view tail = prompt.substr(last + 9);
    bool answered = false;
    for (absl::string_view line : absl::StrSplit(AbslView(tail), '\n')) {
      if (absl::StartsWith(absl::StripLeadingAsciiWhitespace(line),
                           "Claim:")) {
        answered = true;
        break;
      }
    }
    if (!answered) {
      parsed.query = Unquote(tail);
      head = prompt.substr(0, last);
    }
  }

  std::string sentence;
  std::vector<std::string> claims;
  bool in_block = false;
  auto close_block = [&] {
    if (in_block && !claims.empty()) {
      parsed.exemplars.emplace_back(sentence, absl::StrJoin(claims, "\n"));
    }
    claims.clear();
  };
  for (absl::string_view line : absl::StrSplit(AbslView(head), '\n')) {
    absl::string_view stripped = absl::StripAsciiWhitespace(line);
    if (absl::ConsumePrefix(&stripped, "Sentence:")) {
      close_block();
      sentence = Unquote(StdView(stripped));
      in_block = true;
    } else if (in_block && absl::StartsWith(stripped, "Claim:")) {
      claims.emplace_back(stripped);
    }
  }
  close_block();
  return parsed;
}

absl::StatusOr<std::string> EchoCompletionBackend::Complete(
    std::string_view prompt) {
  return ParseFewShotPrompt(prompt).query;
}

absl::StatusOr<std::string> ExemplarCompletionBackend::Complete(
    std::string_view prompt) {
  ParsedPrompt parsed = ParseFewShotPrompt(prompt);
  for (const auto& [sentence, claims] : parsed.exemplars) {
    if (sentence == parsed.query) return claims;
  }
  return parsed.query;
}

}  // namespace crosscheck::backends
