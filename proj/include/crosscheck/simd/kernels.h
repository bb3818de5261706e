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

#ifndef CROSSCHECK_SIMD_KERNELS_H_
#define CROSSCHECK_SIMD_KERNELS_H_

// Dense vector kernels behind embedding similarity.
//
// Each instruction set provides the same table of kernels. The scalar table
// is the reference; vector tables must agree with it to within summation
// reordering (all accumulation is in double, and float*float products are
// exact in double, so only the order of additions differs).
//
// The active table is chosen once from CPUID. CROSSCHECK_SIMD=scalar|avx2|neon
// in the environment overrides the choice (unsupported requests fall back to
// scalar with a warning).

#include <cstddef>
#include <span>
#include <string_view>

namespace crosscheck::simd {

enum class Level { kScalar, kAvx2, kNeon };

struct KernelTable {
  Level level;
  // sum_i a[i] * b[i], accumulated in double.
  double (*dot)(const float* a, const float* b, size_t n);
  // v[i] *= factor.
  void (*scale)(float* v, size_t n, float factor);
};

std::string_view LevelName(Level level);

// True if the kernels for `level` were compiled in and the CPU runs them.
bool IsSupported(Level level);

// Table for `level`; nullptr if unsupported on this build or CPU.
const KernelTable* TableFor(Level level);

const KernelTable& ActiveTable();

// Overrides the active table. Returns false (and changes nothing) if the
// level is unsupported. Intended for tests and benchmarks.
bool SetActiveLevel(Level level);

inline double Dot(std::span<const float> a, std::span<const float> b) {
  return ActiveTable().dot(a.data(), b.data(), a.size());
}

inline double SquaredNorm(std::span<const float> v) {
  return ActiveTable().dot(v.data(), v.data(), v.size());
}

inline void Scale(std::span<float> v, float factor) {
  ActiveTable().scale(v.data(), v.size(), factor);
}

// out[r] = Dot(query, rows[r*dim .. (r+1)*dim)) for each row. Results are
// bitwise identical to calling Dot row by row.
void DotMany(std::span<const float> query, std::span<const float> rows,
             size_t dim, std::span<double> out);

namespace internal {
extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonTable;
#endif
}  // namespace internal

}  // namespace crosscheck::simd

#endif  // CROSSCHECK_SIMD_KERNELS_H_
