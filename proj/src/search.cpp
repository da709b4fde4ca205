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

#include "osumm/search.hpp"

#include <algorithm>
#include <chrono>

#include "osumm/error.hpp"
#include "osumm/kernels.hpp"

namespace osumm::search {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// a/b > c/d on non-negative 64-bit rationals, exact.
bool density_greater(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  using u128 = unsigned __int128;
  return u128(a) * d > u128(c) * b;
}

void canonicalize(std::vector<std::vector<uint32_t>>& family) {
  for (auto& set : family) std::sort(set.begin(), set.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

bool is_subset(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void keep_minimal(std::vector<std::vector<uint32_t>>& family) {
  std::vector<std::vector<uint32_t>> minimal;
  for (const auto& cand : family) {
    bool has_subset = false;
    for (const auto& other : family) {
      if (other.size() < cand.size() && is_subset(other, cand)) {
        has_subset = true;
        break;
      }
    }
    if (!has_subset) minimal.push_back(cand);
  }
  family = std::move(minimal);
}

}  // namespace

std::vector<uint64_t> singleton_numerators(const ReferenceBank& bank) {
  ScoreState state(bank);
  std::vector<uint64_t> nums(bank.num_sentences());
  for (uint32_t id = 0; id < bank.num_sentences(); ++id)
    nums[id] = state.gain(id);
  return nums;
}

std::vector<uint32_t> sentence_order(const ReferenceBank& bank, Budget budget,
                                     const Config& cfg) {
  const std::vector<uint64_t> nums = singleton_numerators(bank);
  std::vector<uint32_t> order;
  for (uint32_t id = 0; id < bank.num_sentences(); ++id) {
    if (bank.sentence_length(id) > budget.l_max) continue;
    if (cfg.prune_zero_gain && bank.sentence_counts(id).empty()) continue;
    order.push_back(id);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) {
                     if (nums[a] != nums[b]) return nums[a] > nums[b];
                     return a < b;
                   });
  return order;
}

GreedyResult greedy_initial(const ReferenceBank& bank, Budget budget) {
  bank.require_scorable();
  ScoreState state(bank);
  std::vector<uint32_t> remaining(bank.num_sentences());
  for (uint32_t id = 0; id < bank.num_sentences(); ++id) remaining[id] = id;

  while (!remaining.empty()) {
    // arg max gain density, ties to the smallest id
    size_t best_pos = 0;
    uint64_t best_gain = state.gain(remaining[0]);
    uint64_t best_len = bank.sentence_length(remaining[0]);
    for (size_t pos = 1; pos < remaining.size(); ++pos) {
      const uint64_t g = state.gain(remaining[pos]);
      const uint64_t l = bank.sentence_length(remaining[pos]);
      if (density_greater(g, l, best_gain, best_len)) {
        best_pos = pos;
        best_gain = g;
        best_len = l;
      }
    }
    const uint32_t chosen = remaining[best_pos];
    if (state.used_length() + bank.sentence_length(chosen) <= budget.l_max)
      state.add(chosen);
    remaining.erase(remaining.begin() + best_pos);
  }

  // best single sentence within the budget
  ScoreState empty(bank);
  uint64_t best_single_num = 0;
  int64_t best_single = -1;
  for (uint32_t id = 0; id < bank.num_sentences(); ++id) {
    if (bank.sentence_length(id) > budget.l_max) continue;
    const uint64_t num = empty.gain(id);
    if (best_single < 0 || num > best_single_num) {
      best_single = id;
      best_single_num = num;
    }
  }

  GreedyResult out;
  if (best_single >= 0 && best_single_num > state.numerator()) {
    out.ids = {static_cast<uint32_t>(best_single)};
    out.score = {best_single_num, bank.denominator()};
    out.total_length = bank.sentence_length(static_cast<uint32_t>(best_single));
  } else {
    out.ids = state.chosen();
    std::sort(out.ids.begin(), out.ids.end());
    out.score = state.score();
    out.total_length = state.used_length();
  }
  return out;
}

BoundValue upper_bound(const ScoreState& state,
                       std::span<const uint32_t> candidates,
                       uint64_t remaining) {
  const ReferenceBank& bank = state.bank();
  struct Item {
    uint64_t num;
    uint64_t len;
    uint32_t id;
  };
  std::vector<Item> items;
  items.reserve(candidates.size());
  for (const uint32_t id : candidates) {
    const uint64_t num = state.gain(id);
    if (num == 0) continue;  // contributes nothing, whole or fractional
    items.push_back({num, bank.sentence_length(id), id});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (density_greater(a.num, a.len, b.num, b.len)) return true;
    if (density_greater(b.num, b.len, a.num, a.len)) return false;
    return a.id < b.id;
  });

  BoundValue bound;
  bound.den = bank.denominator();
  bound.whole_num = state.numerator();
  uint64_t room = remaining;
  for (const Item& item : items) {
    if (item.len <= room) {
      bound.whole_num += item.num;
      room -= item.len;
    } else {
      bound.frac_num = item.num * room;
      bound.frac_den = item.len;
      break;
    }
  }
  return bound;
}

namespace {

// Depth-first subset tree over the sorted branching order; identical walk
// for enumeration and single extraction, only the recording differs.
class BranchAndBound {
 public:
  BranchAndBound(const ReferenceBank& bank, Budget budget, const Config& cfg,
                 bool collect_all)
      : bank_(bank),
        budget_(budget),
        cfg_(cfg),
        collect_all_(collect_all),
        order_(sentence_order(bank, budget, cfg)),
        state_(bank) {}

  void run() {
    const GreedyResult greedy = greedy_initial(bank_, budget_);
    greedy_score_ = greedy.score;
    tau_ = greedy.score.num;
    dfs(0);
  }

  uint64_t tau() const { return tau_; }
  Score greedy_score() const { return greedy_score_; }
  uint64_t nodes_checked() const { return nodes_; }

  std::vector<std::vector<uint32_t>> take_family() {
    std::vector<std::vector<uint32_t>> family;
    for (auto& [num, ids] : recorded_)
      if (num == tau_) family.push_back(std::move(ids));
    canonicalize(family);
    if (cfg_.minimal_only) keep_minimal(family);
    return family;
  }

  std::vector<uint32_t> take_incumbent() {
    std::sort(incumbent_.begin(), incumbent_.end());
    return std::move(incumbent_);
  }

 private:
  void dfs(size_t start) {
    for (size_t pos = start; pos < order_.size(); ++pos) {
      const uint32_t id = order_[pos];
      if (state_.used_length() + bank_.sentence_length(id) > budget_.l_max)
        continue;  // infeasible child, try the neighbor
      state_.add(id);
      ++nodes_;
      const uint64_t num = state_.numerator();
      if (num >= tau_) {
        if (num > tau_) {
          tau_ = num;
          incumbent_ = state_.chosen();
        } else if (incumbent_.empty()) {
          incumbent_ = state_.chosen();
        }
        if (collect_all_) recorded_.emplace_back(num, state_.chosen());
        dfs(pos + 1);
      } else if (!cfg_.prune) {
        dfs(pos + 1);
      } else {
        const std::span<const uint32_t> tail(order_.data() + pos + 1,
                                             order_.size() - pos - 1);
        const BoundValue bound =
            upper_bound(state_, tail, budget_.l_max - state_.used_length());
        if (bound.at_least(tau_)) dfs(pos + 1);
      }
      state_.remove(id);
    }
  }

  const ReferenceBank& bank_;
  Budget budget_;
  Config cfg_;
  bool collect_all_;
  std::vector<uint32_t> order_;
  ScoreState state_;
  uint64_t tau_ = 0;
  Score greedy_score_;
  uint64_t nodes_ = 0;
  std::vector<std::pair<uint64_t, std::vector<uint32_t>>> recorded_;
  std::vector<uint32_t> incumbent_;
};

}  // namespace

OracleResult enumerate_oracles(const ReferenceBank& bank, Budget budget,
                               const Config& cfg) {
  bank.require_scorable();
  const auto start = Clock::now();
  BranchAndBound bb(bank, budget, cfg, /*collect_all=*/true);
  bb.run();
  OracleResult out;
  out.tau = {bb.tau(), bank.denominator()};
  out.oracles = bb.take_family();
  out.nodes_checked = bb.nodes_checked();
  out.greedy_score = bb.greedy_score();
  out.wall_ms = ms_since(start);
  return out;
}

SingleOracle extract_one_oracle(const ReferenceBank& bank, Budget budget,
                                const Config& cfg) {
  bank.require_scorable();
  const auto start = Clock::now();
  BranchAndBound bb(bank, budget, cfg, /*collect_all=*/false);
  bb.run();
  SingleOracle out;
  out.ids = bb.take_incumbent();
  out.score = {bb.tau(), bank.denominator()};
  out.nodes_checked = bb.nodes_checked();
  out.wall_ms = ms_since(start);
  return out;
}

OracleResult exhaustive_oracles(const ReferenceBank& bank, Budget budget,
                                const Config& cfg) {
  bank.require_scorable();
  const auto start = Clock::now();
  std::vector<uint32_t> universe = sentence_order(bank, budget, cfg);
  if (universe.size() > cfg.exhaustive_cap)
    throw Error::validation("exhaustive search refused: " +
                            std::to_string(universe.size()) +
                            " sentences exceed the cap of " +
                            std::to_string(cfg.exhaustive_cap));

  const size_t m = universe.size();
  const auto& ops = kernels::active_ops();
  std::vector<uint32_t> acc(bank.num_slots());

  OracleResult out;
  out.tau = {0, bank.denominator()};
  uint64_t best = 0;
  std::vector<std::vector<uint32_t>> argmax;
  uint64_t feasible = 0;
  for (uint64_t mask = 1; mask < (uint64_t{1} << m); ++mask) {
    uint64_t length = 0;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i)) length += bank.sentence_length(universe[i]);
    if (length > budget.l_max) continue;
    ++feasible;
    std::fill(acc.begin(), acc.end(), 0);
    std::vector<uint32_t> ids;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t{1} << i)) ids.push_back(universe[i]);
    bank.accumulate(ids, acc);
    const uint64_t num =
        ops.sum_min(bank.ref_counts().data(), acc.data(), acc.size());
    if (num > best) {
      best = num;
      argmax.clear();
      argmax.push_back(std::move(ids));
    } else if (num == best) {
      argmax.push_back(std::move(ids));
    }
  }
  // best == 0 with no overlap anywhere: every feasible subset ties at 0,
  // mirroring what the branch and bound records in that degenerate case
  out.tau = {best, bank.denominator()};
  out.oracles = std::move(argmax);
  canonicalize(out.oracles);
  if (cfg.minimal_only) keep_minimal(out.oracles);
  out.nodes_checked = feasible;
  const GreedyResult greedy = greedy_initial(bank, budget);
  out.greedy_score = greedy.score;
  out.wall_ms = ms_since(start);
  return out;
}

}  // namespace osumm::search
