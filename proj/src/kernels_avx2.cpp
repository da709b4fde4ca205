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

// This translation unit is compiled with -mavx2 on x86_64; the functions
// are only reachable through the dispatch table after a cpuid check.

#include "osumm/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

namespace osumm::kernels {
namespace {

// Horizontal sum of a 4 x uint64 accumulator.
inline uint64_t hsum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<uint64_t>(_mm_extract_epi64(s, 0)) +
         static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

// Widen 8 x uint32 into two 4 x uint64 lanes and add them to acc.
inline __m256i accumulate_u32(__m256i acc, __m256i v) {
  const __m256i lo = _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v));
  const __m256i hi = _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1));
  return _mm256_add_epi64(acc, _mm256_add_epi64(lo, hi));
}

uint64_t sum_avx2(const uint32_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = accumulate_u32(acc, va);
  }
  uint64_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += a[i];
  return total;
}

uint64_t sum_min_avx2(const uint32_t* a, const uint32_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = accumulate_u32(acc, _mm256_min_epu32(va, vb));
  }
  uint64_t total = hsum_epi64(acc);
  for (; i < n; ++i) total += std::min(a[i], b[i]);
  return total;
}

uint64_t sum_min_residual_avx2(const uint32_t* ref, const uint32_t* v,
                               const uint32_t* w, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vr =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ref + i));
    const __m256i vv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const __m256i vw =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    // max(ref - v, 0) for unsigned lanes == ref - min(ref, v)
    const __m256i residual = _mm256_sub_epi32(vr, _mm256_min_epu32(vr, vv));
    acc = accumulate_u32(acc, _mm256_min_epu32(residual, vw));
  }
  uint64_t total = hsum_epi64(acc);
  for (; i < n; ++i) {
    const uint32_t residual = ref[i] - std::min(ref[i], v[i]);
    total += std::min(residual, w[i]);
  }
  return total;
}

void add_avx2(uint32_t* acc, const uint32_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i vx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_add_epi32(va, vx));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void sub_avx2(uint32_t* acc, const uint32_t* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i vx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_sub_epi32(va, vx));
  }
  for (; i < n; ++i) acc[i] -= x[i];
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops = {"avx2",        sum_avx2, sum_min_avx2,
                          sum_min_residual_avx2, add_avx2, sub_avx2};
  return ops;
}

}  // namespace osumm::kernels

#endif  // x86_64
