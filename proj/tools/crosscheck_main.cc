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

// Command-line entry point: ingest, extract, filter, link, annotate, run,
// eval and serve.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "crosscheck/cli/config.h"
#include "crosscheck/cli/pipeline.h"
#include "crosscheck/evalharness/eval.h"
#include "crosscheck/server/api.h"
#include "glog/logging.h"

namespace {

using crosscheck::cli::PipelineConfig;

struct Flags {
  std::string config_path;
  std::string data_dir;
  std::optional<std::string> profile;
  std::optional<std::string> method;
  std::optional<int> k;
  std::optional<double> cosine_threshold;
  std::optional<double> jaccard_threshold;
  std::optional<int> cap;
  std::optional<uint64_t> seed;
  std::optional<int> parallelism;
  std::optional<int> port;
};

absl::StatusOr<PipelineConfig> BuildConfig(const Flags& f) {
  PipelineConfig c = crosscheck::cli::DefaultPipelineConfig();
  if (!f.config_path.empty()) {
    auto loaded = crosscheck::cli::LoadPipelineConfig(f.config_path);
    if (!loaded.ok()) return loaded.status();
    c = std::move(*loaded);
  }
  if (f.profile) c.profile = *f.profile;
  if (f.method) {
    auto m = crosscheck::pairfilter::ParseFilterMethod(*f.method);
    if (!m) {
      return absl::InvalidArgumentError("--method must be es or leo");
    }
    c.filter.method = *m;
  }
  if (f.k) c.filter.top_k = *f.k;
  if (f.cosine_threshold) c.filter.cosine_threshold = *f.cosine_threshold;
  if (f.jaccard_threshold) c.filter.jaccard_threshold = *f.jaccard_threshold;
  if (f.cap) c.cap = *f.cap;
  if (f.seed) c.seed = *f.seed;
  if (f.parallelism) c.parallelism = *f.parallelism;
  if (f.port) c.server.port = *f.port;
  c.filter.parallelism = c.parallelism;
  c.data_dir = crosscheck::cli::ResolveDataDir(c, f.data_dir).string();
  if (absl::Status s = c.Validate(); !s.ok()) return s;
  return c;
}

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  return 1;
}

struct EvalFlags {
  std::string input;
  std::optional<double> threshold;
  size_t negatives = 500;
  std::optional<size_t> positives;
  std::string json_out;
};

int RunEval(const PipelineConfig& config, const EvalFlags& e) {
  namespace eh = crosscheck::evalharness;
  auto examples = eh::LoadNliFile(e.input);
  if (!examples.ok()) return Fail(examples.status());
  auto pairs = eh::BuildEvalSet(
      *examples, {e.negatives, config.seed, e.positives});
  if (!pairs.ok()) return Fail(pairs.status());
  crosscheck::pairfilter::FilterConfig filter = config.filter;
  const bool es = filter.method ==
                  crosscheck::pairfilter::FilterMethod::kEmbeddingSimilarity;
  if (e.threshold) {
    (es ? filter.cosine_threshold : filter.jaccard_threshold) = *e.threshold;
  }
  std::unique_ptr<crosscheck::backends::EmbeddingBackend> embedding;
  if (es) {
    auto profile = config.ActiveProfile();
    if (!profile.ok()) return Fail(profile.status());
    auto made = crosscheck::backends::MakeEmbeddingBackend(profile->embedding);
    if (!made.ok()) return Fail(made.status());
    embedding = std::move(*made);
  }
  auto metrics = eh::EvaluateFilter(*pairs, filter, embedding.get());
  if (!metrics.ok()) return Fail(metrics.status());

  nlohmann::json report = {
      {"method", crosscheck::pairfilter::FilterMethodName(filter.method)},
      {"threshold", es ? filter.cosine_threshold : filter.jaccard_threshold},
      {"input", e.input},
      {"seed", config.seed},
      {"pairs", pairs->size()},
      {"metrics", eh::MetricsToJson(*metrics)}};
  std::cout << eh::MetricsTable(
      crosscheck::pairfilter::FilterMethodName(filter.method), *metrics);
  std::cout << report.dump() << "\n";
  if (!e.json_out.empty()) {
    std::ofstream out(e.json_out);
    out << report.dump(2) << "\n";
    if (!out) return Fail(absl::InternalError("cannot write " + e.json_out));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  google::InitGoogleLogging(argv[0]);
  FLAGS_logtostderr = true;

  CLI::App app{"crosscheck: link claims across the articles of a news story"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config_path, "JSON config file");
  app.add_option("--data-dir", f.data_dir,
                 "Cluster store root (overrides CROSSCHECK_DATA_DIR)");
  app.add_option("--profile", f.profile, "Backend profile (stub, live, ...)");
  app.add_option("--method", f.method, "Candidate filter: es or leo");
  app.add_option("--k", f.k, "Neighbours kept per claim (es)");
  app.add_option("--cosine-threshold", f.cosine_threshold);
  app.add_option("--jaccard-threshold", f.jaccard_threshold);
  app.add_option("--cap", f.cap, "Links kept per class");
  app.add_option("--seed", f.seed);
  app.add_option("--parallelism", f.parallelism);
  app.add_option("--port", f.port, "Server port (serve)");

  std::string manifest, cluster_id;
  auto* ingest = app.add_subcommand("ingest", "Collect a manifest's articles");
  ingest->add_option("manifest", manifest)->required();
  auto* extract = app.add_subcommand("extract", "Extract claims");
  extract->add_option("cluster_id", cluster_id)->required();
  auto* filter = app.add_subcommand("filter", "Select candidate claim pairs");
  filter->add_option("cluster_id", cluster_id)->required();
  auto* link = app.add_subcommand("link", "Classify candidates with NLI");
  link->add_option("cluster_id", cluster_id)->required();
  auto* annotate = app.add_subcommand("annotate", "Build reader annotations");
  annotate->add_option("cluster_id", cluster_id)->required();
  auto* run = app.add_subcommand("run", "ingest, extract, filter, link, "
                                        "annotate");
  run->add_option("manifest", manifest)->required();
  EvalFlags e;
  auto* eval = app.add_subcommand("eval", "Evaluate a candidate filter");
  eval->add_option("--input", e.input, "NLI pairs (TSV or JSONL)")
      ->required();
  eval->add_option("--threshold", e.threshold);
  eval->add_option("--negatives", e.negatives, "Random negative pairs");
  eval->add_option("--positives", e.positives,
                   "Sample this many positives (default: all)");
  eval->add_option("--json", e.json_out, "Also write the report here");
  auto* serve = app.add_subcommand("serve", "Serve the reader API");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  absl::StatusOr<PipelineConfig> config = BuildConfig(f);
  if (!config.ok()) return Fail(config.status());
  crosscheck::server::ClusterStore store(config->data_dir);

  if (eval->parsed()) return RunEval(*config, e);
  if (serve->parsed()) {
    crosscheck::server::ApiServer api(store, config->server);
    if (absl::Status s = api.Bind(); !s.ok()) return Fail(s);
    std::cout << "serving " << config->data_dir << " on http://"
              << config->server.host << ":" << api.port() << std::endl;
    absl::Status s = api.Run();
    return s.ok() ? 0 : Fail(s);
  }

  crosscheck::cli::Pipeline pipeline(*config, store);
  if (annotate->parsed()) {
    absl::Status s = pipeline.Annotate(cluster_id);
    return s.ok() ? 0 : Fail(s);
  }
  if (ingest->parsed()) {
    crosscheck::corpus::HttpPageFetcher fetcher;
    auto id = pipeline.Ingest(manifest, fetcher);
    if (!id.ok()) return Fail(id.status());
    std::cout << *id << "\n";
    return 0;
  }

  auto profile = config->ActiveProfile();
  if (!profile.ok()) return Fail(profile.status());
  auto backends = crosscheck::cli::MakeBackends(*profile);
  if (!backends.ok()) return Fail(backends.status());

  absl::Status status;
  if (extract->parsed()) {
    status = pipeline.Extract(cluster_id, *backends->completion);
  } else if (filter->parsed()) {
    status = pipeline.Filter(cluster_id, *backends->embedding);
  } else if (link->parsed()) {
    status = pipeline.Link(cluster_id, *backends->nli);
  } else if (run->parsed()) {
    crosscheck::corpus::HttpPageFetcher fetcher;
    auto id = pipeline.Run(manifest, fetcher, *backends);
    if (!id.ok()) return Fail(id.status());
    std::cout << store.PathFor(*id).string() << "\n";
    return 0;
  }
  return status.ok() ? 0 : Fail(status);
}
