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

#include "osumm/count.hpp"

namespace osumm::count {

CountTable count_table(const std::vector<uint32_t>& lengths, uint64_t l_max) {
  CountTable table;
  table.c.assign(lengths.size() + 1, std::vector<BigInt>(l_max + 1, 0));
  table.c[0][0] = 1;
  for (size_t i = 1; i <= lengths.size(); ++i) {
    const uint64_t len = lengths[i - 1];
    for (uint64_t j = 0; j <= l_max; ++j) {
      table.c[i][j] = table.c[i - 1][j];
      if (j >= len) table.c[i][j] += table.c[i - 1][j - len];
    }
  }
  return table;
}

BigInt count_feasible(const std::vector<uint32_t>& lengths, uint64_t l_max) {
  // rolling row of the table above
  std::vector<BigInt> row(l_max + 1, 0);
  row[0] = 1;
  for (const uint32_t len : lengths) {
    if (len > l_max) continue;  // can never fit
    for (uint64_t j = l_max;; --j) {
      row[j] += row[j - len];
      if (j == len) break;
    }
  }
  BigInt total = 0;
  for (uint64_t j = 1; j <= l_max; ++j) total += row[j];
  return total;
}

BigInt count_feasible(const ReferenceBank& bank, uint64_t l_max,
                      bool filter_no_overlap) {
  std::vector<uint32_t> lengths;
  lengths.reserve(bank.num_sentences());
  for (uint32_t id = 0; id < bank.num_sentences(); ++id) {
    if (filter_no_overlap && bank.sentence_counts(id).empty()) continue;
    lengths.push_back(bank.sentence_length(id));
  }
  return count_feasible(lengths, l_max);
}

}  // namespace osumm::count
