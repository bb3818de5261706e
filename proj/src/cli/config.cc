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

#include "crosscheck/cli/config.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "crosscheck/base/status_macros.h"

namespace crosscheck::cli {
namespace {

using nlohmann::json;

using FieldHandlers =
    std::map<std::string, std::function<absl::Status(const json&)>>;

// Applies one handler per key; any other key is an error.
absl::Status ForEachKey(const json& j, const std::string& where,
                        const FieldHandlers& handlers) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat("config '", where, "' must be an object"));
  }
  for (const auto& [key, value] : j.items()) {
    auto it = handlers.find(key);
    if (it == handlers.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown config key '", where, ".", key, "'"));
    }
    absl::Status s;
    try {
      s = it->second(value);
    } catch (const json::exception&) {
      s = absl::InvalidArgumentError(
          absl::StrCat("config key '", where, ".", key,
                       "' has the wrong type"));
    }
    RETURN_IF_ERROR(s);
  }
  return absl::OkStatus();
}

template <typename T>
std::function<absl::Status(const json&)> Into(T* out) {
  return [out](const json& v) {
    *out = v.get<T>();
    return absl::OkStatus();
  };
}

absl::StatusOr<BackendProfile> ParseProfile(const json& j,
                                            const std::string& name) {
  BackendProfile p = DefaultPipelineConfig().profiles.at("stub");
  auto backend = [](backends::BackendConfig* out) {
    return [out](const json& v) -> absl::Status {
      ASSIGN_OR_RETURN(*out, backends::ParseBackendConfig(v));
      return absl::OkStatus();
    };
  };
  RETURN_IF_ERROR(ForEachKey(j, absl::StrCat("profiles.", name),
                             {{"embedding", backend(&p.embedding)},
                              {"nli", backend(&p.nli)},
                              {"completion", backend(&p.completion)}}));
  return p;
}

}  // namespace

PipelineConfig DefaultPipelineConfig() {
  PipelineConfig c;
  c.profiles["stub"] = BackendProfile{};
  return c;
}

absl::Status PipelineConfig::Validate() const {
  RETURN_IF_ERROR(filter.Validate());
  if (cap < 0) return absl::InvalidArgumentError("link.cap must be >= 0");
  if (parallelism < 1) {
    return absl::InvalidArgumentError("parallelism must be >= 1");
  }
  if (server.port < 0 || server.port > 65535) {
    return absl::InvalidArgumentError("server.port must be in [0, 65535]");
  }
  return ActiveProfile().status();
}

absl::StatusOr<BackendProfile> PipelineConfig::ActiveProfile() const {
  auto it = profiles.find(profile);
  if (it == profiles.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("profile '", profile, "' is not defined in the config"));
  }
  return it->second;
}

absl::StatusOr<PipelineConfig> ParsePipelineConfig(const json& j) {
  PipelineConfig c = DefaultPipelineConfig();
  std::string method = std::string(FilterMethodName(c.filter.method));
  FieldHandlers filter = {
      {"method", Into(&method)},
      {"top_k", Into(&c.filter.top_k)},
      {"cosine_threshold", Into(&c.filter.cosine_threshold)},
      {"jaccard_threshold", Into(&c.filter.jaccard_threshold)}};
  FieldHandlers link = {{"cap", Into(&c.cap)}};
  FieldHandlers server = {{"host", Into(&c.server.host)},
                          {"port", Into(&c.server.port)},
                          {"cors_origin", Into(&c.server.cors_origin)}};
  FieldHandlers top = {
      {"data_dir", Into(&c.data_dir)},
      {"profile", Into(&c.profile)},
      {"profiles",
       [&](const json& v) -> absl::Status {
         if (!v.is_object()) {
           return absl::InvalidArgumentError("'profiles' must be an object");
         }
         for (const auto& [name, body] : v.items()) {
           ASSIGN_OR_RETURN(c.profiles[name], ParseProfile(body, name));
         }
         return absl::OkStatus();
       }},
      {"filter", [&](const json& v) { return ForEachKey(v, "filter", filter); }},
      {"link", [&](const json& v) { return ForEachKey(v, "link", link); }},
      {"server", [&](const json& v) { return ForEachKey(v, "server", server); }},
      {"parallelism", Into(&c.parallelism)},
      {"seed", Into(&c.seed)}};
  RETURN_IF_ERROR(ForEachKey(j, "config", top));
  std::optional<pairfilter::FilterMethod> m =
      pairfilter::ParseFilterMethod(method);
  if (!m) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown filter method '", method, "'"));
  }
  c.filter.method = *m;
  c.filter.parallelism = c.parallelism;
  RETURN_IF_ERROR(c.Validate());
  return c;
}

absl::StatusOr<PipelineConfig> LoadPipelineConfig(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), " is not valid JSON"));
  }
  return ParsePipelineConfig(j);
}

std::filesystem::path ResolveDataDir(const PipelineConfig& config,
                                     const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CROSSCHECK_DATA_DIR");
      env != nullptr && *env != '\0') {
    return env;
  }
  if (!config.data_dir.empty()) return config.data_dir;
  return "data";
}

}  // namespace crosscheck::cli
