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

#ifndef OSUMM_COUNT_HPP
#define OSUMM_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "osumm/bank.hpp"

namespace osumm::count {

// Counts reach 2^|D| - 1, far past 64 bits on real corpora, so the DP is
// carried in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Subset-sum table: table[i][j] = number of subsets of the first i
// sentences with total length exactly j. Kept only for diagnostics; the
// counting entry points below use a rolling row.
struct CountTable {
  std::vector<std::vector<BigInt>> c;  // (|D|+1) x (l_max+1)
};

CountTable count_table(const std::vector<uint32_t>& lengths, uint64_t l_max);

// Number of non-empty subsets with total length in [1, l_max].
BigInt count_feasible(const std::vector<uint32_t>& lengths, uint64_t l_max);

// Same, over the bank's sentences; when filter_no_overlap is set,
// sentences without any reference gram are dropped first.
BigInt count_feasible(const ReferenceBank& bank, uint64_t l_max,
                      bool filter_no_overlap);

}  // namespace osumm::count

#endif  // OSUMM_COUNT_HPP
