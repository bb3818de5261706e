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
#include <fstream>
#include <sstream>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "crosscheck/base/random.h"
#include "crosscheck/base/strings.h"
#include "crosscheck/base/utf8.h"
#include "crosscheck/evalharness/eval.h"

namespace crosscheck::evalharness {
namespace {

using nlilink::NliLabel;

constexpr std::string_view kPremiseKeys[] = {"premise", "sentence1"};
constexpr std::string_view kHypothesisKeys[] = {"hypothesis", "sentence2"};
constexpr std::string_view kLabelKeys[] = {"label", "gold_label"};

std::string_view StripCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::optional<NliLabel> ParseLabel(std::string_view value) {
  value = TrimWhitespace(value);
  if (value == "entailment" || value == "0") return NliLabel::kEntailment;
  if (value == "neutral" || value == "1") return NliLabel::kNeutral;
  if (value == "contradiction" || value == "2") return NliLabel::kContradiction;
  return std::nullopt;
}

absl::StatusOr<std::vector<NliExample>> ParseNliTsv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (absl::string_view l : absl::StrSplit(AbslView(text), '\n')) {
    lines.push_back(StripCr(StdView(l)));
  }
  if (lines.empty() || lines[0].empty()) {
    return absl::InvalidArgumentError("NLI TSV has no header row");
  }
  std::vector<std::string_view> header;
  for (absl::string_view col : absl::StrSplit(AbslView(lines[0]), '\t')) {
    header.push_back(StdView(col));
  }
  auto column = [&](std::span<const std::string_view> names) -> int {
    for (std::string_view name : names) {
      auto it = std::find(header.begin(), header.end(), name);
      if (it != header.end()) return static_cast<int>(it - header.begin());
    }
    return -1;
  };
  const int p = column(kPremiseKeys);
  const int h = column(kHypothesisKeys);
  const int l = column(kLabelKeys);
  if (p < 0 || h < 0 || l < 0) {
    return absl::InvalidArgumentError(
        "NLI TSV header needs premise/sentence1, hypothesis/sentence2 and "
        "label/gold_label columns");
  }
  const size_t need = static_cast<size_t>(std::max({p, h, l})) + 1;
  std::vector<NliExample> out;
  for (size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    std::vector<std::string_view> cells;
    for (absl::string_view c : absl::StrSplit(AbslView(lines[row]), '\t')) {
      cells.push_back(StdView(c));
    }
    if (cells.size() < need) {
      return absl::InvalidArgumentError(
          absl::StrCat("NLI TSV row ", row + 1, " has ", cells.size(),
                       " columns, expected at least ", need));
    }
    std::optional<NliLabel> label = ParseLabel(cells[l]);
    if (!label) continue;
    out.push_back(
        {std::string(cells[p]), std::string(cells[h]), *label});
  }
  return out;
}

absl::StatusOr<std::vector<NliExample>> ParseNliJsonl(std::string_view text) {
  using nlohmann::json;
  std::vector<NliExample> out;
  size_t line_no = 0;
  for (absl::string_view raw : absl::StrSplit(AbslView(text), '\n')) {
    ++line_no;
    std::string_view line = TrimWhitespace(StdView(raw));
    if (line.empty()) continue;
    json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (!row.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("NLI JSONL line ", line_no, " is not a JSON object"));
    }
    auto text_field = [&](std::span<const std::string_view> names)
        -> std::optional<std::string> {
      for (std::string_view name : names) {
        auto it = row.find(std::string(name));
        if (it != row.end() && it->is_string()) return it->get<std::string>();
      }
      return std::nullopt;
    };
    std::optional<std::string> premise = text_field(kPremiseKeys);
    std::optional<std::string> hypothesis = text_field(kHypothesisKeys);
    if (!premise || !hypothesis) {
      return absl::InvalidArgumentError(absl::StrCat(
          "NLI JSONL line ", line_no, " lacks premise or hypothesis"));
    }
    std::optional<NliLabel> label;
    for (std::string_view name : kLabelKeys) {
      auto it = row.find(std::string(name));
      if (it == row.end()) continue;
      if (it->is_string()) label = ParseLabel(it->get<std::string>());
      if (it->is_number_integer()) {
        label = ParseLabel(std::to_string(it->get<int64_t>()));
      }
      break;
    }
    if (!label) continue;
    out.push_back({std::move(*premise), std::move(*hypothesis), *label});
  }
  return out;
}

absl::StatusOr<std::vector<NliExample>> LoadNliFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (absl::EndsWith(path, ".jsonl") || absl::EndsWith(path, ".json")) {
    return ParseNliJsonl(text);
  }
  return ParseNliTsv(text);
}

absl::StatusOr<std::vector<EvalPair>> BuildEvalSet(
    std::span<const NliExample> examples, const EvalSetOptions& options) {
  SeededRng rng(options.seed);
  std::vector<size_t> positive;
  for (size_t i = 0; i < examples.size(); ++i) {
    if (examples[i].label != NliLabel::kNeutral) positive.push_back(i);
  }
  if (options.max_positives && *options.max_positives < positive.size()) {
    // Partial Fisher-Yates, then restore file order.
    const size_t m = *options.max_positives;
    for (size_t i = 0; i < m; ++i) {
      const size_t j = i + rng.UniformIndex(positive.size() - i);
      std::swap(positive[i], positive[j]);
    }
    positive.resize(m);
    std::sort(positive.begin(), positive.end());
  }

  std::vector<EvalPair> out;
  out.reserve(positive.size() + options.n_negatives);
  for (size_t i : positive) {
    out.push_back({examples[i].premise, examples[i].hypothesis,
                   Gold::kPositive});
  }

  if (options.n_negatives == 0) return out;
  // Several hypotheses usually share a premise; sample distinct texts.
  std::vector<std::string_view> premises;
  absl::flat_hash_set<std::string_view> seen;
  for (const NliExample& e : examples) {
    if (seen.insert(e.premise).second) premises.push_back(e.premise);
  }
  const size_t m = premises.size();
  const double possible = 0.5 * static_cast<double>(m) *
                          static_cast<double>(m > 0 ? m - 1 : 0);
  if (static_cast<double>(options.n_negatives) > possible) {
    return absl::InvalidArgumentError(absl::StrCat(
        "cannot draw ", options.n_negatives, " distinct negative pairs from ",
        m, " distinct premises"));
  }
  absl::flat_hash_set<std::pair<size_t, size_t>> used;
  while (used.size() < options.n_negatives) {
    const size_t a = rng.UniformIndex(m);
    const size_t b = rng.UniformIndex(m);
    if (a == b) continue;
    if (!used.insert({std::min(a, b), std::max(a, b)}).second) continue;
    out.push_back({std::string(premises[a]), std::string(premises[b]),
                   Gold::kNegative});
  }
  return out;
}

}  // namespace crosscheck::evalharness
