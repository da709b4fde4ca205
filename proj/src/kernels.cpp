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

#include <cstdlib>
#include <cstring>

#include "osumm/kernels.hpp"
#include "osumm/log.hpp"

namespace osumm::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

#if !defined(__x86_64__) && !defined(_M_X64)
const Ops& avx2_ops() { return scalar_ops(); }
#endif

namespace {

const Ops& select_ops() {
  const char* forced = std::getenv("ORACLE_SUMM_KERNEL");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
    if (std::strcmp(forced, "avx2") == 0) {
      if (avx2_available()) return avx2_ops();
      OSUMM_WARN("ORACLE_SUMM_KERNEL=avx2 requested but AVX2 is unavailable; "
                 "using scalar kernels");
      return scalar_ops();
    }
    OSUMM_WARN("unknown ORACLE_SUMM_KERNEL value '%s'; using default", forced);
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& ops = select_ops();
  return ops;
}

std::vector<const Ops*> supported_ops() {
  std::vector<const Ops*> all;
  all.push_back(&scalar_ops());
  if (avx2_available()) all.push_back(&avx2_ops());
  return all;
}

}  // namespace osumm::kernels
