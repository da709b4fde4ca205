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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "osumm/error.hpp"
#include "osumm/metrics.hpp"

using namespace osumm;
using namespace osumm::metrics;

namespace {

OracleFamily worked_family() {
  // O1 = {1,2,5,6}, O2 = {1,2,3} against S = {1,2,3,4}
  return OracleFamily::validated({{1, 2, 5, 6}, {1, 2, 3}});
}

const std::vector<uint32_t> worked_system = {1, 2, 3, 4};

}  // namespace

TEST_CASE("worked multi-oracle precision/recall/F example") {
  const auto report = multi_oracle_prf(worked_system, worked_family());
  REQUIRE(report.per_oracle.size() == 2);
  CHECK(report.per_oracle[0].precision == doctest::Approx(0.5));
  CHECK(report.per_oracle[0].recall == doctest::Approx(0.5));
  CHECK(report.per_oracle[0].f == doctest::Approx(0.5));
  CHECK(report.per_oracle[1].precision == doctest::Approx(0.75));
  CHECK(report.per_oracle[1].recall == doctest::Approx(1.0));
  CHECK(report.per_oracle[1].f == doctest::Approx(0.857).epsilon(0.001));

  CHECK(report.averaged.precision == doctest::Approx(0.625));
  CHECK(report.averaged.recall == doctest::Approx(0.75));
  CHECK(report.averaged.f == doctest::Approx(2 * 0.625 * 0.75 / 1.375));
}

TEST_CASE("prf rejects an empty system summary") {
  CHECK_THROWS_AS(
      multi_oracle_prf(std::vector<uint32_t>{}, worked_family()), Error);
}

TEST_CASE("oracle family validation") {
  CHECK_THROWS_AS(OracleFamily::validated({}), Error);
  CHECK_THROWS_AS(OracleFamily::validated({{1}, {}}), Error);
  CHECK_THROWS_AS(OracleFamily::validated({{1, 2}, {2, 1}}), Error);
}

TEST_CASE("exact oracle match gives perfect scores") {
  const auto fam = OracleFamily::validated({{3, 4, 7}});
  const auto report = multi_oracle_prf(std::vector<uint32_t>{3, 4, 7}, fam);
  CHECK(report.averaged.precision == 1.0);
  CHECK(report.averaged.recall == 1.0);
  CHECK(report.averaged.f == 1.0);
}

TEST_CASE("degenerate families reproduce the per-oracle F") {
  // identical P,R across oracles -> averaged F equals per-oracle F
  const auto fam = OracleFamily::validated({{1, 2}, {1, 3}});
  const auto report = multi_oracle_prf(std::vector<uint32_t>{1}, fam);
  CHECK(report.per_oracle[0].f == doctest::Approx(report.per_oracle[1].f));
  CHECK(report.averaged.f == doctest::Approx(report.per_oracle[0].f));
}

TEST_CASE("prf values always live in [0,1]") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<std::vector<uint32_t>> sets;
    const size_t fam_size = 1 + rng() % 4;
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 0; i < fam_size; ++i) {
      std::vector<uint32_t> s;
      for (uint32_t id = 0; id < 8; ++id)
        if (rng() % 2) s.push_back(id);
      if (s.empty()) s.push_back(static_cast<uint32_t>(rng() % 8));
      if (seen.insert(s).second) sets.push_back(s);
    }
    std::vector<uint32_t> system;
    for (uint32_t id = 0; id < 8; ++id)
      if (rng() % 2) system.push_back(id);
    if (system.empty()) system.push_back(0);

    const auto report =
        multi_oracle_prf(system, OracleFamily::validated(sets));
    for (const auto& prf :
         std::vector<PRF>{report.averaged, report.per_oracle.front()}) {
      CHECK(prf.precision >= 0.0);
      CHECK(prf.precision <= 1.0);
      CHECK(prf.recall >= 0.0);
      CHECK(prf.recall <= 1.0);
      CHECK(prf.f >= 0.0);
      CHECK(prf.f <= 1.0);
    }
  }
}

TEST_CASE("jaccard index") {
  const std::vector<uint32_t> a = {1, 2};
  CHECK(jaccard(a, a) == 1.0);
  CHECK(jaccard(a, std::vector<uint32_t>{3, 4}) == 0.0);
  CHECK(jaccard(a, std::vector<uint32_t>{1, 3}) == doctest::Approx(1.0 / 3));
  CHECK(jaccard(a, std::vector<uint32_t>{}) == 0.0);
  CHECK_THROWS_AS(jaccard(std::vector<uint32_t>{}, std::vector<uint32_t>{}),
                  Error);
}

TEST_CASE("pearson on small vectors") {
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{2, 4, 6}) ==
        doctest::Approx(1.0));
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}) ==
        doctest::Approx(-1.0));
  CHECK(pearson(std::vector<double>{1, 2, 3}, std::vector<double>{1, 3, 2}) ==
        doctest::Approx(0.5));
  // frozen against an independent statistics implementation
  CHECK(pearson(std::vector<double>{0.1, 0.4, 0.35, 0.8},
                std::vector<double>{0.3, 0.2, 0.6, 0.9}) ==
        doctest::Approx(0.7821414475677071));

  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{1}),
                  Error);
  CHECK_THROWS_AS(
      pearson(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), Error);
  CHECK_THROWS_AS(
      pearson(std::vector<double>{1, 1}, std::vector<double>{1, 2}), Error);
}

TEST_CASE("pearson of an affine transform is the slope sign") {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> xs(5 + rng() % 10);
    for (auto& x : xs) x = static_cast<double>(rng() % 1000) / 10.0;
    // keep xs non-constant
    xs[0] += 1000.0;
    const double a = (rng() % 2 ? 1.0 : -1.0) * (1.0 + rng() % 5);
    const double b = static_cast<double>(rng() % 100);
    std::vector<double> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = a * xs[i] + b;
    CHECK(pearson(xs, ys) == doctest::Approx(a > 0 ? 1.0 : -1.0));
  }
}

TEST_CASE("spearman ranks with ties") {
  CHECK(spearman(std::vector<double>{1, 2, 3, 4},
                 std::vector<double>{10, 20, 30, 40}) == doctest::Approx(1.0));
  CHECK(spearman(std::vector<double>{1, 2, 3, 4},
                 std::vector<double>{4, 3, 2, 1}) == doctest::Approx(-1.0));
  // frozen against an independent statistics implementation
  CHECK(spearman(std::vector<double>{1, 2, 2, 3},
                 std::vector<double>{1, 2, 3, 4}) ==
        doctest::Approx(0.9486832980505139));
  CHECK(spearman(std::vector<double>{3, 1, 4, 1, 5},
                 std::vector<double>{2, 7, 1, 8, 2}) ==
        doctest::Approx(-0.7894736842105264));
}

TEST_CASE("spearman is invariant under strictly monotone transforms") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> xs(6 + rng() % 8);
    std::vector<double> ys(xs.size());
    for (auto& x : xs) x = static_cast<double>(rng() % 50);
    for (auto& y : ys) y = static_cast<double>(rng() % 50);
    xs[0] += 100;  // avoid constant vectors
    ys[0] += 100;
    const double base = spearman(xs, ys);
    std::vector<double> xs2(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) xs2[i] = std::exp(xs[i] / 25.0);
    std::vector<double> ys2(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) ys2[i] = 3.0 * ys[i] + 7.0;
    CHECK(spearman(xs2, ys2) == doctest::Approx(base));
  }
}

TEST_CASE("random-single evaluation is deterministic per seed") {
  const auto fam = worked_family();
  const auto a = random_single_eval(worked_system, fam, 100, 42);
  const auto b = random_single_eval(worked_system, fam, 100, 42);
  CHECK(a.mean.f == b.mean.f);
  CHECK(a.f_ci_low == b.f_ci_low);
  CHECK(a.f_ci_high == b.f_ci_high);
  CHECK(a.f_ci_low <= a.mean.f);
  CHECK(a.mean.f <= a.f_ci_high);
  // the mean of draws lies between the two per-oracle F values
  CHECK(a.mean.f >= 0.5);
  CHECK(a.mean.f <= 0.86);

  const auto c = random_single_eval(worked_system, fam, 100, 43);
  CHECK(c.mean.f != a.mean.f);  // different draws almost surely
}

TEST_CASE("random-single evaluation of a singleton family is exact") {
  const auto fam = OracleFamily::validated({{1, 2, 3}});
  const auto r = random_single_eval(std::vector<uint32_t>{1, 2, 3}, fam, 50, 7);
  CHECK(r.mean.f == 1.0);
  CHECK(r.f_ci_low == 1.0);
  CHECK(r.f_ci_high == 1.0);
}
