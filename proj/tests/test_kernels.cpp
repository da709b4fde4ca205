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

#include <random>
#include <vector>

#include "doctest.h"
#include "osumm/kernels.hpp"

using osumm::kernels::Ops;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, size_t n,
                                 uint32_t max_value) {
  std::vector<uint32_t> v(n);
  for (auto& x : v) x = static_cast<uint32_t>(rng() % (uint64_t{max_value} + 1));
  return v;
}

}  // namespace

TEST_CASE("scalar kernels compute the definitional sums") {
  const Ops& ops = osumm::kernels::scalar_ops();
  const std::vector<uint32_t> a = {3, 0, 7, 2};
  const std::vector<uint32_t> b = {1, 5, 7, 9};
  CHECK(ops.sum(a.data(), a.size()) == 12);
  CHECK(ops.sum_min(a.data(), b.data(), a.size()) == 1 + 0 + 7 + 2);
  // residual of ref=a minus v=b, clipped by w
  const std::vector<uint32_t> w = {9, 9, 9, 0};
  // max(a-b,0) = {2,0,0,0}; min with w = {2,0,0,0}
  CHECK(ops.sum_min_residual(a.data(), b.data(), w.data(), a.size()) == 2);
  CHECK(ops.sum(a.data(), 0) == 0);
}

TEST_CASE("every supported kernel variant matches scalar exactly") {
  const auto variants = osumm::kernels::supported_ops();
  REQUIRE(!variants.empty());
  const Ops& ref = osumm::kernels::scalar_ops();
  std::mt19937_64 rng(20260810);

  for (const Ops* ops : variants) {
    CAPTURE(ops->name);
    // sizes straddle the 8-lane width, including ragged tails and empty
    for (const size_t n : {0, 1, 3, 7, 8, 9, 16, 31, 64, 129, 1000}) {
      for (int rep = 0; rep < 8; ++rep) {
        // large values exercise the unsigned widening
        const uint32_t cap = rep % 2 == 0 ? 12 : 0xFFFFFFFFu;
        auto a = random_vec(rng, n, cap);
        auto b = random_vec(rng, n, cap);
        auto w = random_vec(rng, n, cap);
        CHECK(ops->sum(a.data(), n) == ref.sum(a.data(), n));
        CHECK(ops->sum_min(a.data(), b.data(), n) ==
              ref.sum_min(a.data(), b.data(), n));
        CHECK(ops->sum_min_residual(a.data(), b.data(), w.data(), n) ==
              ref.sum_min_residual(a.data(), b.data(), w.data(), n));

        auto acc1 = random_vec(rng, n, 1u << 20);
        auto acc2 = acc1;
        auto x = random_vec(rng, n, 1u << 20);
        ops->add(acc1.data(), x.data(), n);
        ref.add(acc2.data(), x.data(), n);
        CHECK(acc1 == acc2);
        ops->sub(acc1.data(), x.data(), n);
        ref.sub(acc2.data(), x.data(), n);
        CHECK(acc1 == acc2);
      }
    }
  }
}

TEST_CASE("add then sub round-trips the accumulator") {
  for (const Ops* ops : osumm::kernels::supported_ops()) {
    CAPTURE(ops->name);
    std::mt19937_64 rng(7);
    auto acc = random_vec(rng, 57, 1000);
    const auto original = acc;
    const auto x = random_vec(rng, 57, 1000);
    ops->add(acc.data(), x.data(), acc.size());
    ops->sub(acc.data(), x.data(), acc.size());
    CHECK(acc == original);
  }
}

TEST_CASE("active kernel is one of the supported variants") {
  const Ops& active = osumm::kernels::active_ops();
  bool found = false;
  for (const Ops* ops : osumm::kernels::supported_ops())
    if (ops == &active) found = true;
  CHECK(found);
}
