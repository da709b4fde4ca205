// Copyright 2026 the oracle-summ authors
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

#include "osumm/kernels.hpp"

namespace osumm::kernels {
namespace {

uint64_t sum_scalar(const uint32_t* a, std::size_t n) {
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

uint64_t sum_min_scalar(const uint32_t* a, const uint32_t* b, std::size_t n) {
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += std::min(a[i], b[i]);
  return acc;
}

uint64_t sum_min_residual_scalar(const uint32_t* ref, const uint32_t* v,
                                 const uint32_t* w, std::size_t n) {
  uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const uint32_t residual = ref[i] - std::min(ref[i], v[i]);
    acc += std::min(residual, w[i]);
  }
  return acc;
}

void add_scalar(uint32_t* acc, const uint32_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void sub_scalar(uint32_t* acc, const uint32_t* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] -= x[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {"scalar",        sum_scalar, sum_min_scalar,
                          sum_min_residual_scalar, add_scalar, sub_scalar};
  return ops;
}

}  // namespace osumm::kernels
