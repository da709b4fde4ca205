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

#ifndef OSUMM_SEARCH_HPP
#define OSUMM_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "osumm/rouge.hpp"

namespace osumm::search {

struct Budget {
  uint64_t l_max = 1;  // word budget, >= 1
};

struct Config {
  bool prune = true;            // false: bound treated as +inf (audit mode)
  bool prune_zero_gain = true;  // drop sentences with no reference gram
  bool minimal_only = false;    // restrict output to inclusion-minimal sets
  uint32_t exhaustive_cap = 20;
};

// Sentences eligible for branching: length within budget, optionally only
// those with clip-relevant grams; ordered by descending singleton score,
// ties by ascending id.
std::vector<uint32_t> sentence_order(const ReferenceBank& bank, Budget budget,
                                     const Config& cfg = {});

std::vector<uint64_t> singleton_numerators(const ReferenceBank& bank);

struct GreedyResult {
  std::vector<uint32_t> ids;
  Score score;
  uint64_t total_length = 0;
};

// Density-greedy warm start. Skips (and discards) candidates that would
// overflow the budget; finally returns the better of the greedy set and
// the best single fitting sentence.
GreedyResult greedy_initial(const ReferenceBank& bank, Budget budget);

// Fractional-knapsack relaxation bound: current score plus the best
// density-ordered fill of the remaining budget from the candidate
// sentences, with a fractional final item. Exact rational value:
// whole_num/den + frac_num/(den*frac_den).
struct BoundValue {
  uint64_t whole_num = 0;
  uint64_t frac_num = 0;
  uint64_t frac_den = 1;
  uint64_t den = 1;

  // bound >= num/den, compared exactly
  bool at_least(uint64_t num) const {
    using u128 = unsigned __int128;
    return u128(whole_num) * frac_den + frac_num >= u128(num) * frac_den;
  }
  double value() const {
    return (static_cast<double>(whole_num) +
            static_cast<double>(frac_num) / static_cast<double>(frac_den)) /
           static_cast<double>(den);
  }
};

BoundValue upper_bound(const ScoreState& state,
                       std::span<const uint32_t> candidates,
                       uint64_t remaining);

struct OracleResult {
  Score tau;
  // each set sorted ascending; the family sorted lexicographically
  std::vector<std::vector<uint32_t>> oracles;
  uint64_t nodes_checked = 0;
  double wall_ms = 0.0;
  Score greedy_score;
};

// Enumerates every feasible sentence set attaining the optimal score via
// depth-first branch and bound warm-started by the greedy score.
OracleResult enumerate_oracles(const ReferenceBank& bank, Budget budget,
                               const Config& cfg = {});

struct SingleOracle {
  std::vector<uint32_t> ids;
  Score score;
  uint64_t nodes_checked = 0;
  double wall_ms = 0.0;
};

// Same search, but records only the first set attaining the final score.
SingleOracle extract_one_oracle(const ReferenceBank& bank, Budget budget,
                                const Config& cfg = {});

// Testing oracle: scores every feasible subset of the same branching
// universe from scratch. Refuses universes above cfg.exhaustive_cap.
OracleResult exhaustive_oracles(const ReferenceBank& bank, Budget budget,
                                const Config& cfg = {});

}  // namespace osumm::search

#endif  // OSUMM_SEARCH_HPP
