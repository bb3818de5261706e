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

#ifndef CROSSCHECK_NLILINK_LINK_H_
#define CROSSCHECK_NLILINK_LINK_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "crosscheck/backends/contracts.h"
#include "crosscheck/claimext/claims.h"
#include "crosscheck/pairfilter/filter.h"

namespace crosscheck::nlilink {

enum class NliLabel { kEntailment, kContradiction, kNeutral };

std::string_view NliLabelName(NliLabel label);
std::optional<NliLabel> ParseNliLabel(std::string_view name);

struct NliVerdict {
  NliLabel label = NliLabel::kNeutral;
  backends::NliScores probabilities;

  double Probability(NliLabel l) const;
  double confidence() const { return Probability(label); }
};

// Argmax with ties resolved neutral > entailment > contradiction, so a pair
// the model cannot separate from neutral never becomes a link.
NliVerdict VerdictFromScores(const backends::NliScores& scores);

// Rejects empty texts and scores off the probability simplex.
absl::StatusOr<NliVerdict> ClassifyPair(std::string_view premise,
                                        std::string_view hypothesis,
                                        backends::NliBackend& backend);

// A directed, non-neutral relation between claims of different articles.
struct ClaimLink {
  std::string premise_claim;
  std::string hypothesis_claim;
  NliLabel label = NliLabel::kEntailment;
  double confidence = 0.0;

  bool operator==(const ClaimLink&) const = default;
};

struct LinkOptions {
  // Links kept per class. Inclusive: cap=100 keeps up to 100.
  int cap = 100;
  int parallelism = 4;
};

struct LinkStats {
  size_t candidates = 0;
  size_t skipped = 0;  // backend failure in either direction
  size_t neutral = 0;
  size_t entailment_before_cap = 0;
  size_t contradiction_before_cap = 0;
  size_t entailment = 0;
  size_t contradiction = 0;
};

// Classifies each candidate both ways; the more confident non-neutral
// direction (a->b on a tie) becomes the link. Then each class keeps its
// `cap` most confident links, ties broken by the unordered claim-id pair.
// Output: entailment links, then contradiction, each by confidence.
// Unknown claim ids are a DataLoss error; same-article candidates are
// InvalidArgument.
absl::StatusOr<std::vector<ClaimLink>> LinkCandidates(
    std::span<const pairfilter::CandidatePair> candidates,
    std::span<const claimext::Claim> claims, backends::NliBackend& backend,
    const LinkOptions& options = {}, LinkStats* stats = nullptr);

struct SentenceRef {
  std::string article_id;
  int sentence_index = 0;

  auto operator<=>(const SentenceRef&) const = default;
  bool operator==(const SentenceRef&) const = default;
};

// A claim link lifted to sentences. Endpoints are stored in canonical order
// (focus < evidence); the relation is read from either side.
struct SentenceLink {
  SentenceRef focus;
  SentenceRef evidence;
  NliLabel label = NliLabel::kEntailment;
  double confidence = 0.0;
  std::string focus_claim_id;
  std::string evidence_claim_id;
  std::string focus_claim_text;
  std::string evidence_claim_text;

  bool operator==(const SentenceLink&) const = default;
};

// Maps each claim link through claim -> sentence and collapses links that
// join the same sentence pair with the same label to the most confident
// one. Ordered by (focus, evidence, label). A link naming an unknown claim
// is a DataLoss error.
absl::StatusOr<std::vector<SentenceLink>> ProjectLinks(
    std::span<const ClaimLink> links,
    std::span<const claimext::Claim> claims);

}  // namespace crosscheck::nlilink

#endif  // CROSSCHECK_NLILINK_LINK_H_
