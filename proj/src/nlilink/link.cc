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

#include "crosscheck/nlilink/link.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "crosscheck/base/parallel.h"
#include "crosscheck/base/status_macros.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/utf8.h"
#include "glog/logging.h"

namespace crosscheck::nlilink {
namespace {

using claimext::Claim;

absl::flat_hash_map<std::string, const Claim*> IndexClaims(
    std::span<const Claim> claims) {
  absl::flat_hash_map<std::string, const Claim*> index;
  for (const Claim& c : claims) index.emplace(c.claim_id, &c);
  return index;
}

absl::StatusOr<const Claim*> Resolve(
    const absl::flat_hash_map<std::string, const Claim*>& index,
    const std::string& id) {
  auto it = index.find(id);
  if (it == index.end()) {
    return absl::DataLossError(absl::StrCat("unknown claim id '", id, "'"));
  }
  return it->second;
}

// Canonical (smaller, larger) claim ids of a link.
std::pair<std::string_view, std::string_view> PairKey(const ClaimLink& l) {
  return l.premise_claim < l.hypothesis_claim
             ? std::pair<std::string_view, std::string_view>(
                   l.premise_claim, l.hypothesis_claim)
             : std::pair<std::string_view, std::string_view>(
                   l.hypothesis_claim, l.premise_claim);
}

bool ByConfidence(const ClaimLink& x, const ClaimLink& y) {
  if (x.confidence != y.confidence) return x.confidence > y.confidence;
  return PairKey(x) < PairKey(y);
}

}  // namespace

std::string_view NliLabelName(NliLabel label) {
  switch (label) {
    case NliLabel::kEntailment:
      return "entailment";
    case NliLabel::kContradiction:
      return "contradiction";
    case NliLabel::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::optional<NliLabel> ParseNliLabel(std::string_view name) {
  if (name == "entailment") return NliLabel::kEntailment;
  if (name == "contradiction") return NliLabel::kContradiction;
  if (name == "neutral") return NliLabel::kNeutral;
  return std::nullopt;
}

double NliVerdict::Probability(NliLabel l) const {
  switch (l) {
    case NliLabel::kEntailment:
      return probabilities.entailment;
    case NliLabel::kContradiction:
      return probabilities.contradiction;
    case NliLabel::kNeutral:
      return probabilities.neutral;
  }
  return 0.0;
}

NliVerdict VerdictFromScores(const backends::NliScores& s) {
  NliVerdict v;
  v.probabilities = s;
  // Visit labels in priority order; only a strictly larger value displaces.
  v.label = NliLabel::kNeutral;
  double best = s.neutral;
  if (s.entailment > best) {
    v.label = NliLabel::kEntailment;
    best = s.entailment;
  }
  if (s.contradiction > best) v.label = NliLabel::kContradiction;
  return v;
}

absl::StatusOr<NliVerdict> ClassifyPair(std::string_view premise,
                                        std::string_view hypothesis,
                                        backends::NliBackend& backend) {
  if (TrimWhitespace(premise).empty() || TrimWhitespace(hypothesis).empty()) {
    return absl::InvalidArgumentError("NLI inputs must be non-empty");
  }
  ASSIGN_OR_RETURN(backends::NliScores scores,
                   backend.Classify(premise, hypothesis));
  RETURN_IF_ERROR(backends::ValidateSimplex(scores));
  return VerdictFromScores(scores);
}

absl::StatusOr<std::vector<ClaimLink>> LinkCandidates(
    std::span<const pairfilter::CandidatePair> candidates,
    std::span<const Claim> claims, backends::NliBackend& backend,
    const LinkOptions& options, LinkStats* stats) {
  if (options.cap < 0) return absl::InvalidArgumentError("cap must be >= 0");
  const auto index = IndexClaims(claims);

  struct Job {
    const Claim* a;
    const Claim* b;
  };
  std::vector<Job> jobs;
  jobs.reserve(candidates.size());
  for (const auto& cand : candidates) {
    ASSIGN_OR_RETURN(const Claim* a, Resolve(index, cand.claim_a));
    ASSIGN_OR_RETURN(const Claim* b, Resolve(index, cand.claim_b));
    if (a->article_id == b->article_id) {
      return absl::InvalidArgumentError(absl::StrCat(
          "candidate ", cand.claim_a, " / ", cand.claim_b,
          " lies within one article"));
    }
    if (b->claim_id < a->claim_id) std::swap(a, b);
    jobs.push_back({a, b});
  }

  enum class Outcome { kSkipped, kNeutral, kLinked };
  std::vector<Outcome> outcome(jobs.size(), Outcome::kSkipped);
  std::vector<ClaimLink> result(jobs.size());
  ParallelFor(jobs.size(), options.parallelism, [&](size_t i) {
    const Claim& a = *jobs[i].a;
    const Claim& b = *jobs[i].b;
    absl::StatusOr<NliVerdict> ab = ClassifyPair(a.text, b.text, backend);
    absl::StatusOr<NliVerdict> ba =
        ab.ok() ? ClassifyPair(b.text, a.text, backend) : ab;
    if (!ab.ok() || !ba.ok()) {
      LOG(WARNING) << "skipping " << a.claim_id << " / " << b.claim_id
                   << ": " << (ab.ok() ? ba.status() : ab.status());
      return;
    }
    const bool ab_linked = ab->label != NliLabel::kNeutral;
    const bool ba_linked = ba->label != NliLabel::kNeutral;
    if (!ab_linked && !ba_linked) {
      outcome[i] = Outcome::kNeutral;
      return;
    }
    const bool use_ba =
        ba_linked && (!ab_linked || ba->confidence() > ab->confidence());
    const NliVerdict& v = use_ba ? *ba : *ab;
    result[i] = ClaimLink{use_ba ? b.claim_id : a.claim_id,
                          use_ba ? a.claim_id : b.claim_id, v.label,
                          v.confidence()};
    outcome[i] = Outcome::kLinked;
  });

  LinkStats local;
  local.candidates = candidates.size();
  std::vector<ClaimLink> entail, contra;
  for (size_t i = 0; i < jobs.size(); ++i) {
    switch (outcome[i]) {
      case Outcome::kSkipped:
        ++local.skipped;
        break;
      case Outcome::kNeutral:
        ++local.neutral;
        break;
      case Outcome::kLinked:
        (result[i].label == NliLabel::kEntailment ? entail : contra)
            .push_back(std::move(result[i]));
        break;
    }
  }
  local.entailment_before_cap = entail.size();
  local.contradiction_before_cap = contra.size();
  const size_t cap = static_cast<size_t>(options.cap);
  for (auto* group : {&entail, &contra}) {
    std::sort(group->begin(), group->end(), ByConfidence);
    if (group->size() > cap) group->resize(cap);
  }
  local.entailment = entail.size();
  local.contradiction = contra.size();
  if (stats != nullptr) *stats = local;

  std::vector<ClaimLink> out = std::move(entail);
  out.insert(out.end(), std::make_move_iterator(contra.begin()),
             std::make_move_iterator(contra.end()));
  return out;
}

absl::StatusOr<std::vector<SentenceLink>> ProjectLinks(
    std::span<const ClaimLink> links, std::span<const Claim> claims) {
  const auto index = IndexClaims(claims);
  using Key = std::tuple<SentenceRef, SentenceRef, NliLabel>;
  std::map<Key, SentenceLink> best;
  for (const ClaimLink& link : links) {
    ASSIGN_OR_RETURN(const Claim* p, Resolve(index, link.premise_claim));
    ASSIGN_OR_RETURN(const Claim* h, Resolve(index, link.hypothesis_claim));
    SentenceLink s{{p->article_id, p->sentence_index},
                   {h->article_id, h->sentence_index},
                   link.label,
                   link.confidence,
                   p->claim_id,
                   h->claim_id,
                   p->text,
                   h->text};
    if (s.evidence < s.focus) {
      std::swap(s.focus, s.evidence);
      std::swap(s.focus_claim_id, s.evidence_claim_id);
      std::swap(s.focus_claim_text, s.evidence_claim_text);
    }
    Key key{s.focus, s.evidence, s.label};
    auto [it, inserted] = best.try_emplace(key, s);
    if (inserted) continue;
    // Keep the higher confidence; on a tie, the smaller claim-id pair.
    SentenceLink& cur = it->second;
    if (s.confidence > cur.confidence ||
        (s.confidence == cur.confidence &&
         std::tie(s.focus_claim_id, s.evidence_claim_id) <
             std::tie(cur.focus_claim_id, cur.evidence_claim_id))) {
      cur = std::move(s);
    }
  }
  std::vector<SentenceLink> out;
  out.reserve(best.size());
  for (auto& [key, s] : best) out.push_back(std::move(s));
  return out;
}

}  // namespace crosscheck::nlilink
