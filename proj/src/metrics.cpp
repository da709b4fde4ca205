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

#include "osumm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "osumm/error.hpp"

namespace osumm::metrics {
namespace {

double f_measure(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

size_t intersection_size(const std::set<uint32_t>& a,
                         std::span<const uint32_t> b) {
  size_t n = 0;
  for (const uint32_t id : b) n += a.count(id);
  return n;
}

}  // namespace

OracleFamily OracleFamily::validated(std::vector<std::vector<uint32_t>> sets) {
  if (sets.empty())
    throw Error::validation("oracle family must not be empty");
  std::set<std::vector<uint32_t>> seen;
  for (auto& o : sets) {
    if (o.empty())
      throw Error::validation("oracle family contains an empty set");
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    if (!seen.insert(o).second)
      throw Error::validation("oracle family contains duplicate sets");
  }
  return OracleFamily{std::move(sets)};
}

EvalReport multi_oracle_prf(std::span<const uint32_t> system_ids,
                            const OracleFamily& family) {
  if (system_ids.empty())
    throw Error::validation("system summary must not be empty");
  if (family.oracles.empty())
    throw Error::validation("oracle family must not be empty");
  const std::set<uint32_t> system(system_ids.begin(), system_ids.end());

  EvalReport report;
  report.per_oracle.reserve(family.oracles.size());
  double p_sum = 0.0;
  double r_sum = 0.0;
  for (const auto& oracle : family.oracles) {
    const size_t overlap = intersection_size(system, oracle);
    PRF prf;
    prf.precision = static_cast<double>(overlap) / system.size();
    prf.recall = static_cast<double>(overlap) / oracle.size();
    prf.f = f_measure(prf.precision, prf.recall);
    p_sum += prf.precision;
    r_sum += prf.recall;
    report.per_oracle.push_back(prf);
  }
  report.averaged.precision = p_sum / family.oracles.size();
  report.averaged.recall = r_sum / family.oracles.size();
  report.averaged.f =
      f_measure(report.averaged.precision, report.averaged.recall);
  return report;
}

double jaccard(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  const std::set<uint32_t> sa(a.begin(), a.end());
  const std::set<uint32_t> sb(b.begin(), b.end());
  std::set<uint32_t> all(sa);
  all.insert(sb.begin(), sb.end());
  if (all.empty())
    throw Error::validation("jaccard of two empty sets is undefined");
  size_t inter = 0;
  for (const uint32_t id : sa) inter += sb.count(id);
  return static_cast<double>(inter) / static_cast<double>(all.size());
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error::validation("correlation inputs differ in length");
  const size_t n = xs.size();
  if (n < 2)
    throw Error::validation("correlation needs at least two points");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw Error::validation("correlation undefined for constant input");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> xs) {
  const size_t n = xs.size();
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(n);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t p = i; p <= j; ++p) ranks[idx[p]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error::validation("correlation inputs differ in length");
  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);
  return pearson(rx, ry);
}

RandomSingleReport random_single_eval(std::span<const uint32_t> system_ids,
                                      const OracleFamily& family,
                                      uint32_t draws, uint64_t seed,
                                      uint32_t bootstrap_resamples) {
  if (draws == 0) throw Error::validation("draws must be >= 1");
  const EvalReport full = multi_oracle_prf(system_ids, family);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, family.oracles.size() - 1);
  std::vector<double> fs;
  fs.reserve(draws);
  RandomSingleReport report;
  report.draws = draws;
  double p_sum = 0.0;
  double r_sum = 0.0;
  double f_sum = 0.0;
  for (uint32_t d = 0; d < draws; ++d) {
    const PRF& prf = full.per_oracle[pick(rng)];
    p_sum += prf.precision;
    r_sum += prf.recall;
    f_sum += prf.f;
    fs.push_back(prf.f);
  }
  report.mean.precision = p_sum / draws;
  report.mean.recall = r_sum / draws;
  report.mean.f = f_sum / draws;

  // percentile bootstrap over the draw means
  std::vector<double> means;
  means.reserve(bootstrap_resamples);
  std::uniform_int_distribution<size_t> resample(0, fs.size() - 1);
  for (uint32_t b = 0; b < bootstrap_resamples; ++b) {
    double total = 0.0;
    for (size_t i = 0; i < fs.size(); ++i) total += fs[resample(rng)];
    means.push_back(total / fs.size());
  }
  std::sort(means.begin(), means.end());
  const auto percentile = [&](double q) {
    const double pos = q * (means.size() - 1);
    const size_t lo = static_cast<size_t>(pos);
    const size_t hi = std::min(lo + 1, means.size() - 1);
    const double frac = pos - lo;
    return means[lo] * (1.0 - frac) + means[hi] * frac;
  };
  report.f_ci_low = percentile(0.025);
  report.f_ci_high = percentile(0.975);
  return report;
}

}  // namespace osumm::metrics
