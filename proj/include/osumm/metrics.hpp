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

#ifndef OSUMM_METRICS_HPP
#define OSUMM_METRICS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace osumm::metrics {

// Non-empty, pairwise-distinct oracle sentence sets.
struct OracleFamily {
  std::vector<std::vector<uint32_t>> oracles;

  static OracleFamily validated(std::vector<std::vector<uint32_t>> sets);
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

struct EvalReport {
  PRF averaged;                // P, R averaged over oracles; F = 2PR/(P+R)
  std::vector<PRF> per_oracle;
};

// Sentence-overlap precision/recall/F of a system summary against every
// oracle in the family, averaged. S must be non-empty.
EvalReport multi_oracle_prf(std::span<const uint32_t> system_ids,
                            const OracleFamily& family);

// |A intersect B| / |A union B|; fails when both sets are empty.
double jaccard(std::span<const uint32_t> a, std::span<const uint32_t> b);

// Sample Pearson product-moment correlation; requires equal lengths >= 2
// and non-constant inputs.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson over average-ranked data (ties get fractional ranks).
double spearman(std::span<const double> xs, std::span<const double> ys);

struct RandomSingleReport {
  uint32_t draws = 0;
  PRF mean;
  double f_ci_low = 0.0;   // bootstrap 95% interval for the mean F
  double f_ci_high = 0.0;
};

// Evaluates against a single randomly drawn oracle `draws` times and
// reports the mean with a bootstrap 95% interval; deterministic per seed.
RandomSingleReport random_single_eval(std::span<const uint32_t> system_ids,
                                      const OracleFamily& family,
                                      uint32_t draws, uint64_t seed,
                                      uint32_t bootstrap_resamples = 1000);

}  // namespace osumm::metrics

#endif  // OSUMM_METRICS_HPP
