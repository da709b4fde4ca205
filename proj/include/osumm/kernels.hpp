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

#ifndef OSUMM_KERNELS_HPP
#define OSUMM_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

// Integer kernels over dense n-gram count vectors. Scoring a sentence set
// against a reference bank reduces to clipped-count sums of the form
// sum_i min(a[i], b[i]); these run over every slot of the bank and are the
// data-parallel inner loops of batch scoring. Scalar versions are the
// reference semantics; the AVX2 versions must match them bit for bit
// (all arithmetic is exact: uint32 counts, uint64 accumulation).

namespace osumm::kernels {

struct Ops {
  const char* name;
  // sum_i a[i]
  uint64_t (*sum)(const uint32_t* a, std::size_t n);
  // sum_i min(a[i], b[i])
  uint64_t (*sum_min)(const uint32_t* a, const uint32_t* b, std::size_t n);
  // sum_i min(max(ref[i] - v[i], 0), w[i])
  uint64_t (*sum_min_residual)(const uint32_t* ref, const uint32_t* v,
                               const uint32_t* w, std::size_t n);
  // acc[i] += x[i]
  void (*add)(uint32_t* acc, const uint32_t* x, std::size_t n);
  // acc[i] -= x[i]; caller guarantees acc[i] >= x[i]
  void (*sub)(uint32_t* acc, const uint32_t* x, std::size_t n);
};

const Ops& scalar_ops();

bool avx2_available();
// Valid to call only when avx2_available() (or when merely taking the
// pointer table for dispatch tests on a capable host).
const Ops& avx2_ops();

// Best supported variant for this process. ORACLE_SUMM_KERNEL=scalar|avx2
// forces a variant; an unsupported request falls back to scalar with a
// warning.
const Ops& active_ops();

// Every variant that can run on this host, scalar first. Used by the
// equivalence tests.
std::vector<const Ops*> supported_ops();

}  // namespace osumm::kernels

#endif  // OSUMM_KERNELS_HPP
