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

#include "crosscheck/simd/kernels.h"

namespace crosscheck::simd::internal {
namespace {

double DotScalar(const float* a, const float* b, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return acc;
}

void ScaleScalar(float* v, size_t n, float factor) {
  for (size_t i = 0; i < n; ++i) v[i] *= factor;
}

}  // namespace

const KernelTable kScalarTable = {Level::kScalar, &DotScalar, &ScaleScalar};

}  // namespace crosscheck::simd::internal
