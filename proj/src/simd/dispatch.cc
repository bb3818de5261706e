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

#include <atomic>
#include <cstdlib>
#include <string>

#include "crosscheck/simd/kernels.h"
#include "glog/logging.h"

namespace crosscheck::simd {

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kScalar:
      return "scalar";
    case Level::kAvx2:
      return "avx2";
    case Level::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* TableFor(Level level) {
  switch (level) {
    case Level::kScalar:
      return &internal::kScalarTable;
    case Level::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return &internal::kAvx2Table;
      }
#endif
      return nullptr;
    case Level::kNeon:
#if defined(__aarch64__)
      return &internal::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool IsSupported(Level level) { return TableFor(level) != nullptr; }

namespace {

const KernelTable* DetectBest() {
  if (const char* env = std::getenv("CROSSCHECK_SIMD")) {
    const std::string want(env);
    for (Level level : {Level::kScalar, Level::kAvx2, Level::kNeon}) {
      if (want != LevelName(level)) continue;
      if (const KernelTable* table = TableFor(level)) return table;
      LOG(WARNING) << "CROSSCHECK_SIMD=" << want
                   << " is not supported here; using scalar kernels";
      return &internal::kScalarTable;
    }
    LOG(WARNING) << "unrecognized CROSSCHECK_SIMD=" << want;
  }
  for (Level level : {Level::kAvx2, Level::kNeon}) {
    if (const KernelTable* table = TableFor(level)) return table;
  }
  return &internal::kScalarTable;
}

std::atomic<const KernelTable*>& ActiveSlot() {
  static std::atomic<const KernelTable*> slot{DetectBest()};
  return slot;
}

}  // namespace

const KernelTable& ActiveTable() {
  return *ActiveSlot().load(std::memory_order_relaxed);
}

bool SetActiveLevel(Level level) {
  const KernelTable* table = TableFor(level);
  if (table == nullptr) return false;
  ActiveSlot().store(table, std::memory_order_relaxed);
  return true;
}

void DotMany(std::span<const float> query, std::span<const float> rows,
             size_t dim, std::span<double> out) {
  CHECK_EQ(query.size(), dim);
  CHECK_EQ(rows.size(), dim * out.size());
  const KernelTable& table = ActiveTable();
  for (size_t r = 0; r < out.size(); ++r) {
    out[r] = table.dot(query.data(), rows.data() + r * dim, dim);
  }
}

}  // namespace crosscheck::simd
