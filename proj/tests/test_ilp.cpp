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
#include <sstream>

#include "doctest.h"
#include "osumm/error.hpp"
#include "osumm/ilp.hpp"
#include "osumm/rouge.hpp"
#include "osumm/search.hpp"
#include "support/builders.hpp"
#include "support/lp_parser.hpp"

using namespace osumm;
using namespace osumm::ilp;
using testsupport::build_corpus;
using testsupport::spec_corpus;

namespace {

// Brute-force optimum of the model over all feasible sentence choices.
uint64_t brute_force_optimum(const IlpModel& model) {
  const size_t n = model.num_sentences();
  REQUIRE(n <= 20);
  uint64_t best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    uint64_t length = 0;
    std::vector<uint32_t> chosen;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) {
        length += model.lengths[i];
        chosen.push_back(static_cast<uint32_t>(i));
      }
    if (length > model.l_max) continue;
    best = std::max(best, evaluate_assignment(model, chosen));
  }
  return best;
}

}  // namespace

TEST_CASE("build_ilp shapes the worked corpus model") {
  const auto c = spec_corpus();
  const auto model = build_ilp(*c.bank, {4});
  CHECK(model.num_sentences() == 3);
  CHECK(model.num_slots() == 3);  // grams a, b, c
  CHECK(model.denominator == 4);
  CHECK(brute_force_optimum(model) == 4);

  const auto tight = build_ilp(*c.bank, {2});
  CHECK(brute_force_optimum(tight) == 2);
}

TEST_CASE("build_ilp rejects empty references") {
  const auto c = build_corpus({{{"a"}}}, {{"a", "b"}}, 2);
  CHECK_THROWS_AS(build_ilp(*c.bank, {4}), Error);
}

TEST_CASE("objective_to_rouge divides by the constant denominator") {
  const auto c = spec_corpus();
  const auto model = build_ilp(*c.bank, {4});
  CHECK(objective_to_rouge(model, 4).value() == 1.0);
  CHECK(objective_to_rouge(model, 0).value() == 0.0);
  CHECK(objective_to_rouge(model, 2).value() == 0.5);
}

TEST_CASE("evaluate_assignment computes the optimal completion") {
  const auto c = spec_corpus();
  const auto model = build_ilp(*c.bank, {4});
  CHECK(evaluate_assignment(model, std::vector<uint32_t>{0, 1}) == 4);
  CHECK(evaluate_assignment(model, std::vector<uint32_t>{}) == 0);
  CHECK(evaluate_assignment(model, std::vector<uint32_t>{2}) == 1);
  // length constraint enforced
  CHECK_THROWS_AS(evaluate_assignment(model, std::vector<uint32_t>{0, 1, 2}),
                  Error);
}

TEST_CASE("evaluate_assignment equals the rouge numerator on random sets") {
  std::mt19937_64 rng(991);
  int done = 0;
  while (done < 100) {
    const auto inst = testsupport::random_instance(rng, 12);
    const auto& bank = *inst.corpus.bank;
    if (bank.denominator() == 0) continue;
    const auto model = build_ilp(bank, {inst.l_max});
    std::vector<uint32_t> chosen;
    uint64_t length = 0;
    for (uint32_t id = 0; id < bank.num_sentences(); ++id) {
      if (rng() % 2 == 0 &&
          length + bank.sentence_length(id) <= inst.l_max) {
        chosen.push_back(id);
        length += bank.sentence_length(id);
      }
    }
    CHECK(evaluate_assignment(model, chosen) == rouge_n(bank, chosen).num);
    ++done;
  }
}

TEST_CASE("model optimum equals the enumerator's tau") {
  std::mt19937_64 rng(1771);
  int done = 0;
  while (done < 40) {
    const auto inst = testsupport::random_instance(rng, 11);
    const auto& bank = *inst.corpus.bank;
    if (bank.denominator() == 0) continue;
    const auto model = build_ilp(bank, {inst.l_max});
    const auto result = search::enumerate_oracles(bank, {inst.l_max});
    CHECK(brute_force_optimum(model) == result.tau.num);
    // every enumerated oracle attains it
    for (const auto& oracle : result.oracles)
      CHECK(evaluate_assignment(model, oracle) == result.tau.num);
    ++done;
  }
}

TEST_CASE("lp files start with Maximize and serialize deterministically") {
  const auto c = spec_corpus();
  const auto model = build_ilp(*c.bank, {4});
  std::ostringstream first;
  write_lp_file(model, first);
  std::ostringstream second;
  write_lp_file(model, second);
  CHECK(first.str() == second.str());
  CHECK(first.str().substr(0, 9) == "Maximize\n");
  CHECK(first.str().find("\r") == std::string::npos);
}

TEST_CASE("an independent parser round-trips the lp file") {
  const auto c = spec_corpus();
  const auto model = build_ilp(*c.bank, {4});
  std::ostringstream out;
  write_lp_file(model, out);
  const auto parsed = testsupport::LpParser::parse(out.str());

  CHECK(parsed.maximize);
  CHECK(parsed.objective.size() == model.num_slots());
  // len + one supply and one demand row per slot
  CHECK(parsed.constraints.size() == 1 + 2 * model.num_slots());
  CHECK(parsed.binaries.size() == model.num_sentences());
  CHECK(parsed.generals.size() == model.num_slots());
  CHECK(parsed.bounds.size() == model.num_slots());

  // spot-check the length row: 2 x_0 + 2 x_1 + 2 x_2 <= 4
  const auto& len = parsed.constraints.front();
  CHECK(len.name == "len");
  CHECK(len.relation == "<=");
  CHECK(len.rhs == 4);
  CHECK(len.terms.at("x_0") == 2);
  CHECK(len.terms.at("x_1") == 2);
  CHECK(len.terms.at("x_2") == 2);

  // every supply row has the -1 z coefficient and >= 0
  for (const auto& row : parsed.constraints) {
    if (row.name.rfind("sup_", 0) != 0) continue;
    CHECK(row.relation == ">=");
    CHECK(row.rhs == 0);
    const std::string z = "z" + row.name.substr(3);
    CHECK(row.terms.at(z) == -1);
  }

  // demand rows bound z by the reference count; grams sort a,b,c with
  // counts 2,1,1
  for (const auto& row : parsed.constraints) {
    if (row.name.rfind("dem_", 0) != 0) continue;
    CHECK(row.relation == "<=");
    const std::string z = "z" + row.name.substr(3);
    CHECK(row.terms.at(z) == 1);
    CHECK(parsed.bounds.at(z).second == row.rhs);
  }
  CHECK(parsed.bounds.at("z_0_0").second == 2);
  CHECK(parsed.bounds.at("z_0_1").second == 1);
  CHECK(parsed.bounds.at("z_0_2").second == 1);
}

TEST_CASE("lp round-trip preserves coefficients on random instances") {
  std::mt19937_64 rng(3131);
  int done = 0;
  while (done < 25) {
    const auto inst = testsupport::random_instance(rng, 10);
    const auto& bank = *inst.corpus.bank;
    if (bank.denominator() == 0) continue;
    const auto model = build_ilp(bank, {inst.l_max});
    std::ostringstream out;
    write_lp_file(model, out);
    const auto parsed = testsupport::LpParser::parse(out.str());

    REQUIRE(parsed.constraints.size() == 1 + 2 * model.num_slots());
    // supply coefficients match N(g_j, s_i) slot by slot
    for (size_t slot = 0; slot < model.num_slots(); ++slot) {
      const std::string name = "sup_" + model.z_name(slot).substr(2);
      const auto row =
          std::find_if(parsed.constraints.begin(), parsed.constraints.end(),
                       [&](const auto& r) { return r.name == name; });
      REQUIRE(row != parsed.constraints.end());
      size_t terms = 0;
      for (const auto& [id, count] : model.supply[slot]) {
        CHECK(row->terms.at(model.x_name(id)) ==
              static_cast<long long>(count));
        ++terms;
      }
      CHECK(row->terms.size() == terms + 1);  // + the z term
    }
    ++done;
  }
}
